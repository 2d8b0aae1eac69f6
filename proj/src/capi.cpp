#include "fatpoints.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "fatpoints/cutting.hpp"
#include "fatpoints/errors.hpp"
#include "fatpoints/homogeneous.hpp"
#include "fatpoints/interp.hpp"
#include "fatpoints/negcurve.hpp"
#include "fatpoints/render.hpp"
#include "fatpoints/textio.hpp"

using json = nlohmann::ordered_json;

struct fp_system {
    fatpoints::LinearSystem value;
};

struct fp_certificate {
    fatpoints::CertPtr value;
};

namespace {

thread_local std::string g_last_error;

fp_status map_code(fatpoints::ErrorCode c) {
    using EC = fatpoints::ErrorCode;
    switch (c) {
    case EC::Parse:
        return FP_ERR_PARSE;
    case EC::CapExceeded:
        return FP_ERR_CAP;
    case EC::NegativeCoordinate:
    case EC::PointOnCutLine:
    case EC::ZeroCoordinate:
    case EC::PrimeTooSmall:
    case EC::DivisibilityViolation:
    case EC::NotProjectivePlaneSystem:
        return FP_ERR_DOMAIN;
    case EC::CardinalityMismatch:
    case EC::VdimMismatch:
    case EC::MissingEoLSCertificate:
    case EC::BaseMissing:
    case EC::Invalid:
        return FP_ERR_INVALID;
    }
    return FP_ERR_INTERNAL;
}

template <typename F> fp_status guarded(F&& f) {
    g_last_error.clear();
    try {
        return f();
    } catch (const fatpoints::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return FP_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FP_ERR_INTERNAL;
    }
}

fp_status fail(fp_status s, const char* msg) {
    g_last_error = msg;
    return s;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fp_options with_defaults(const fp_options* opts) {
    fp_options o;
    fp_options_init(&o);
    if (opts) o = *opts;
    if (o.field_prime == 0) o.field_prime = fatpoints::kDefaultPrime;
    if (o.jobs <= 0) o.jobs = 1;
    return o;
}

json witness_json(const fatpoints::Witness& w) {
    json out;
    out["class"] = w.curve_class.str();
    out["degree"] = w.curve_class.d;
    out["mults"] = w.curve_class.mults;
    out["pairing"] = w.pairing_value;
    out["source"] = w.source;
    return out;
}

} // namespace

extern "C" {

void fp_options_init(fp_options* opts) {
    if (!opts) return;
    *opts = fp_options{};
}

fp_status fp_system_parse(const char* diagram, const char* mults, fp_system** out) {
    if (!diagram || !mults || !out) return fail(FP_ERR_INVALID, "null argument");
    return guarded([&] {
        auto sys = new fp_system{{fatpoints::parse_diagram(diagram),
                                  fatpoints::parse_mults(mults)}};
        *out = sys;
        return FP_OK;
    });
}

fp_status fp_system_plane(int64_t degree, const char* mults, fp_system** out) {
    if (!mults || !out) return fail(FP_ERR_INVALID, "null argument");
    return guarded([&] {
        if (degree < 0)
            throw fatpoints::Error(fatpoints::ErrorCode::Invalid, "degree must be >= 0");
        *out = new fp_system{fatpoints::plane_system(degree, fatpoints::parse_mults(mults))};
        return FP_OK;
    });
}

void fp_system_free(fp_system* sys) { delete sys; }

fp_status fp_dim(const fp_system* sys, const fp_options* opts, char** json_out) {
    if (!sys || !json_out) return fail(FP_ERR_INVALID, "null argument");
    return guarded([&] {
        fp_options o = with_defaults(opts);
        int trials = o.trials > 0 ? o.trials : 3;
        auto res = fatpoints::generic_dimension(sys->value, trials, o.seed, o.field_prime);
        json j;
        j["diagram"] = fatpoints::format_diagram(sys->value.diagram);
        j["mults"] = fatpoints::format_mults(sys->value.mults);
        j["dim"] = res.value;
        j["vdim"] = res.vdim;
        j["edim"] = res.edim;
        j["special"] = res.value > res.edim;
        j["certainty"] = fatpoints::certainty_name(res.certainty);
        j["error_bound"] = res.error_bound;
        j["modulus"] = res.modulus;
        j["seed"] = res.seed;
        j["trials"] = res.trials.size();
        *json_out = dup_string(j.dump());
        return FP_OK;
    });
}

fp_status fp_prove(const fp_system* sys, const fp_options* opts, fp_certificate** out) {
    if (!sys || !out) return fail(FP_ERR_INVALID, "null argument");
    return guarded([&] {
        fp_options o = with_defaults(opts);
        fatpoints::SearchConfig cfg;
        if (o.depth > 0) cfg.max_depth = o.depth;
        if (o.trials > 0) cfg.trials = o.trials;
        cfg.seed = o.seed;
        cfg.field_prime = o.field_prime;
        auto found = fatpoints::search_cut_proof(sys->value, cfg);
        if (!found) return fail(FP_NOT_FOUND, "no certificate found within the search budget");
        *out = new fp_certificate{*found};
        return FP_OK;
    });
}

fp_status fp_certificate_serialize(const fp_certificate* cert, char** json_out) {
    if (!cert || !json_out) return fail(FP_ERR_INVALID, "null argument");
    return guarded([&] {
        *json_out = dup_string(fatpoints::serialize_certificate(*cert->value));
        return FP_OK;
    });
}

fp_status fp_certificate_parse(const char* json_text, fp_certificate** out) {
    if (!json_text || !out) return fail(FP_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = new fp_certificate{
            fatpoints::make_cert(fatpoints::parse_certificate(json_text))};
        return FP_OK;
    });
}

void fp_certificate_free(fp_certificate* cert) { delete cert; }

fp_status fp_verify(const fp_certificate* cert, const fp_options* opts,
                    char** report_json_out) {
    if (!cert) return fail(FP_ERR_INVALID, "null argument");
    return guarded([&] {
        fp_options o = with_defaults(opts);
        fatpoints::VerifyConfig cfg{o.field_prime};
        auto rep = fatpoints::verify(*cert->value, cfg);
        if (report_json_out) {
            json j;
            j["verified"] = rep.verified;
            j["concluded_dim"] = rep.concluded_dim;
            j["nodes"] = rep.node_count;
            j["rank_leaves"] = rep.rank_leaves;
            j["equiv_leaves"] = rep.equiv_leaves;
            j["cut_nodes"] = rep.cut_nodes;
            j["lemma_leaves"] = rep.lemma_leaves;
            j["empty_leaves"] = rep.empty_leaves;
            j["max_depth"] = rep.max_depth;
            j["failure_path"] = rep.failure_path;
            *report_json_out = dup_string(j.dump());
        }
        if (!rep.verified) {
            g_last_error = rep.failure_path;
            return FP_NOT_VERIFIED;
        }
        return FP_OK;
    });
}

fp_status fp_witness(const fp_system* sys, char** json_out) {
    if (!sys || !json_out) return fail(FP_ERR_INVALID, "null argument");
    return guarded([&] {
        auto w = fatpoints::find_witness(sys->value);
        if (!w) return fail(FP_NOT_FOUND, "no (-1)-curve witness found");
        *json_out = dup_string(witness_json(*w).dump());
        return FP_OK;
    });
}

fp_status fp_hh_campaign(int64_t m_max, int64_t d_max, const fp_options* opts,
                         char** jsonl_out) {
    if (!jsonl_out) return fail(FP_ERR_INVALID, "null argument");
    return guarded([&] {
        fp_options o = with_defaults(opts);
        fatpoints::CampaignConfig cfg;
        if (o.trials > 0) cfg.trials = o.trials;
        cfg.seed = o.seed;
        cfg.field_prime = o.field_prime;
        cfg.jobs = o.jobs;
        auto records = fatpoints::hh_campaign(m_max, d_max, cfg);
        std::string out;
        for (const auto& rec : records) {
            out += fatpoints::campaign_record_json(rec);
            out += '\n';
        }
        *jsonl_out = dup_string(out);
        return FP_OK;
    });
}

fp_status fp_render_system(const fp_system* sys, int svg, char** out) {
    if (!sys || !out) return fail(FP_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = dup_string(svg ? fatpoints::render_diagram_svg(sys->value.diagram)
                              : fatpoints::render_diagram_ascii(sys->value.diagram));
        return FP_OK;
    });
}

fp_status fp_render_certificate(const fp_certificate* cert, int svg, char** out) {
    if (!cert || !out) return fail(FP_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = dup_string(svg ? fatpoints::render_certificate_svg(*cert->value)
                              : fatpoints::render_certificate_ascii(*cert->value));
        return FP_OK;
    });
}

void fp_string_free(char* s) { std::free(s); }

const char* fp_last_error(void) { return g_last_error.c_str(); }

} // extern "C"
