#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fatpoints.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1; // not found / not verified
constexpr int kExitUsage = 2;

struct Options {
    std::uint64_t field_prime = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    int depth = 0;
    int jobs = 0;
    std::string format = "text";
    std::string out;
};

fp_options to_fp(const Options& o) {
    fp_options fo;
    fp_options_init(&fo);
    fo.field_prime = o.field_prime;
    fo.trials = o.trials;
    fo.seed = o.seed;
    fo.depth = o.depth;
    fo.jobs = o.jobs;
    return fo;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--field-prime", o.field_prime, "Prime modulus for rank sampling")
        ->envname("FATPOINTS_FIELD_PRIME");
    cmd->add_option("--trials", o.trials, "Monte-Carlo trials per rank")
        ->envname("FATPOINTS_TRIALS");
    cmd->add_option("--seed", o.seed, "Random seed")->envname("FATPOINTS_SEED");
    cmd->add_option("--depth", o.depth, "Proof search depth")->envname("FATPOINTS_DEPTH");
    cmd->add_option("--jobs", o.jobs, "Worker threads")->envname("FATPOINTS_JOBS");
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("FATPOINTS_FORMAT");
    cmd->add_option("--out", o.out, "Write output to a file instead of stdout")
        ->envname("FATPOINTS_OUT");
}

struct SystemArgs {
    std::int64_t degree = -1;
    std::string diagram;
    std::string mults;
};

void add_system(CLI::App* cmd, SystemArgs& s) {
    auto* deg = cmd->add_option("-d,--degree", s.degree, "Degree of a full plane system");
    auto* dia = cmd->add_option("-D,--diagram", s.diagram,
                                "Diagram: columns \"2^3,1^0\" or points \"[(0,3),(1,0)]\"");
    cmd->add_option("-m,--mults", s.mults, "Multiplicities, e.g. \"7x6,6x4,1\"")->required();
    deg->excludes(dia);
}

using SystemPtr = std::unique_ptr<fp_system, decltype(&fp_system_free)>;
using CertPtr = std::unique_ptr<fp_certificate, decltype(&fp_certificate_free)>;

int make_system(const SystemArgs& args, SystemPtr& out) {
    fp_system* sys = nullptr;
    fp_status st;
    if (!args.diagram.empty())
        st = fp_system_parse(args.diagram.c_str(), args.mults.c_str(), &sys);
    else if (args.degree >= 0)
        st = fp_system_plane(args.degree, args.mults.c_str(), &sys);
    else {
        std::cerr << "error: give either --degree or --diagram\n";
        return kExitUsage;
    }
    if (st != FP_OK) {
        std::cerr << "error: " << fp_last_error() << '\n';
        return st == FP_ERR_PARSE || st == FP_ERR_INVALID ? kExitUsage : kExitNegative;
    }
    out.reset(sys);
    return kExitOk;
}

int emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return kExitOk;
    }
    std::ofstream file(o.out);
    if (!file) {
        std::cerr << "error: cannot open " << o.out << " for writing\n";
        return kExitUsage;
    }
    file << text;
    return kExitOk;
}

std::string grab(char* s) {
    std::string out = s ? s : "";
    fp_string_free(s);
    return out;
}

int run_dim(const Options& o, const SystemArgs& args) {
    SystemPtr sys{nullptr, fp_system_free};
    if (int rc = make_system(args, sys)) return rc;
    fp_options fo = to_fp(o);
    char* raw = nullptr;
    if (fp_dim(sys.get(), &fo, &raw) != FP_OK) {
        std::cerr << "error: " << fp_last_error() << '\n';
        return kExitNegative;
    }
    std::string payload = grab(raw);
    if (o.format == "json") return emit(o, payload);
    auto j = nlohmann::json::parse(payload);
    std::ostringstream text;
    text << "system:    L(" << j["diagram"].get<std::string>() << "; "
         << j["mults"].get<std::string>() << ")\n"
         << "dim:       " << j["dim"].get<std::int64_t>() << '\n'
         << "vdim:      " << j["vdim"].get<std::int64_t>() << '\n'
         << "edim:      " << j["edim"].get<std::int64_t>() << '\n'
         << "special:   " << (j["special"].get<bool>() ? "yes" : "no") << '\n'
         << "certainty: " << j["certainty"].get<std::string>() << '\n';
    if (j["special"].get<bool>())
        text << "error bound: " << j["error_bound"].get<double>() << '\n';
    return emit(o, text.str());
}

int run_prove(const Options& o, const SystemArgs& args) {
    SystemPtr sys{nullptr, fp_system_free};
    if (int rc = make_system(args, sys)) return rc;
    fp_options fo = to_fp(o);
    fp_certificate* raw_cert = nullptr;
    fp_status st = fp_prove(sys.get(), &fo, &raw_cert);
    if (st == FP_NOT_FOUND) {
        std::cerr << "no certificate found: " << fp_last_error() << '\n';
        return kExitNegative;
    }
    if (st != FP_OK) {
        std::cerr << "error: " << fp_last_error() << '\n';
        return kExitNegative;
    }
    CertPtr cert{raw_cert, fp_certificate_free};
    char* text = nullptr;
    if (fp_certificate_serialize(cert.get(), &text) != FP_OK) {
        std::cerr << "error: " << fp_last_error() << '\n';
        return kExitNegative;
    }
    std::string payload = grab(text);
    if (o.format == "json") return emit(o, payload);
    char* report = nullptr;
    fp_verify(cert.get(), &fo, &report);
    auto j = nlohmann::json::parse(grab(report));
    std::ostringstream out;
    out << "certificate found: " << j["nodes"].get<std::size_t>() << " nodes, "
        << j["cut_nodes"].get<std::size_t>() << " cuts, depth "
        << j["max_depth"].get<std::size_t>() << ", concluded dim "
        << j["concluded_dim"].get<std::int64_t>() << '\n';
    if (!o.out.empty()) {
        std::ofstream file(o.out);
        if (!file) {
            std::cerr << "error: cannot open " << o.out << " for writing\n";
            return kExitUsage;
        }
        file << payload;
        std::cout << out.str();
        return kExitOk;
    }
    out << payload << '\n';
    return emit(o, out.str());
}

int run_verify(const Options& o, const std::string& cert_file) {
    std::ifstream file(cert_file);
    if (!file) {
        std::cerr << "error: cannot read " << cert_file << '\n';
        return kExitUsage;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    fp_certificate* raw = nullptr;
    if (fp_certificate_parse(buffer.str().c_str(), &raw) != FP_OK) {
        std::cerr << "error: " << fp_last_error() << '\n';
        return kExitUsage;
    }
    CertPtr cert{raw, fp_certificate_free};
    fp_options fo = to_fp(o);
    char* report = nullptr;
    fp_status st = fp_verify(cert.get(), &fo, &report);
    std::string payload = grab(report);
    if (o.format == "json") {
        emit(o, payload);
    } else {
        auto j = nlohmann::json::parse(payload);
        std::ostringstream out;
        out << (j["verified"].get<bool>() ? "verified" : "NOT verified") << ": "
            << j["nodes"].get<std::size_t>() << " nodes, " << j["cut_nodes"].get<std::size_t>()
            << " cuts, depth " << j["max_depth"].get<std::size_t>() << ", concluded dim "
            << j["concluded_dim"].get<std::int64_t>() << '\n';
        if (!j["verified"].get<bool>())
            out << "failure at: " << j["failure_path"].get<std::string>() << '\n';
        emit(o, out.str());
    }
    return st == FP_OK ? kExitOk : kExitNegative;
}

int run_hh(const Options& o, std::int64_t m_max, std::int64_t d_max) {
    fp_options fo = to_fp(o);
    char* raw = nullptr;
    if (fp_hh_campaign(m_max, d_max, &fo, &raw) != FP_OK) {
        std::cerr << "error: " << fp_last_error() << '\n';
        return kExitNegative;
    }
    std::string payload = grab(raw);
    if (o.format == "json") return emit(o, payload);
    std::size_t records = 0, special = 0, disagreements = 0;
    std::istringstream lines(payload);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line);
        ++records;
        if (j["verdict"].get<std::string>() == "special") ++special;
        if (!j["agrees"].get<bool>()) ++disagreements;
    }
    std::ostringstream out;
    out << "systems:       " << records << '\n'
        << "special:       " << special << '\n'
        << "disagreements: " << disagreements << '\n';
    int rc = emit(o, out.str());
    if (rc) return rc;
    return disagreements == 0 ? kExitOk : kExitNegative;
}

int run_render(const Options& o, const SystemArgs& args, const std::string& cert_file,
               bool svg) {
    char* raw = nullptr;
    fp_status st;
    if (!cert_file.empty()) {
        std::ifstream file(cert_file);
        if (!file) {
            std::cerr << "error: cannot read " << cert_file << '\n';
            return kExitUsage;
        }
        std::stringstream buffer;
        buffer << file.rdbuf();
        fp_certificate* cert_raw = nullptr;
        if (fp_certificate_parse(buffer.str().c_str(), &cert_raw) != FP_OK) {
            std::cerr << "error: " << fp_last_error() << '\n';
            return kExitUsage;
        }
        CertPtr cert{cert_raw, fp_certificate_free};
        st = fp_render_certificate(cert.get(), svg ? 1 : 0, &raw);
    } else {
        SystemPtr sys{nullptr, fp_system_free};
        if (int rc = make_system(args, sys)) return rc;
        st = fp_render_system(sys.get(), svg ? 1 : 0, &raw);
    }
    if (st != FP_OK) {
        std::cerr << "error: " << fp_last_error() << '\n';
        return kExitNegative;
    }
    return emit(o, grab(raw));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dimensions of linear systems of plane curves with fat base points"};
    app.require_subcommand(1);
    Options o;

    SystemArgs dim_args;
    auto* dim = app.add_subcommand("dim", "Estimate the dimension of a system");
    add_system(dim, dim_args);
    add_common(dim, o);

    SystemArgs prove_args;
    auto* prove = app.add_subcommand("prove", "Search for a cut certificate");
    add_system(prove, prove_args);
    add_common(prove, o);

    std::string verify_file;
    auto* verify = app.add_subcommand("verify", "Re-validate a certificate file");
    verify->add_option("certificate", verify_file, "Certificate JSON file")->required();
    add_common(verify, o);

    std::int64_t m_max = 4, d_max = 15;
    auto* hh = app.add_subcommand("hh", "Sweep homogeneous systems and check the criterion");
    hh->add_option("--max-mult", m_max, "Largest multiplicity");
    hh->add_option("--max-degree", d_max, "Largest degree");
    add_common(hh, o);

    SystemArgs render_args;
    std::string render_cert;
    bool svg = false;
    auto* render = app.add_subcommand("render", "Draw a diagram or a certificate");
    auto* rdeg = render->add_option("-d,--degree", render_args.degree, "Full plane degree");
    auto* rdia = render->add_option("-D,--diagram", render_args.diagram, "Diagram text");
    render->add_option("-m,--mults", render_args.mults, "Multiplicities");
    auto* rcert = render->add_option("--certificate", render_cert, "Certificate JSON file");
    render->add_flag("--svg", svg, "Emit SVG instead of ASCII");
    rdeg->excludes(rdia);
    rcert->excludes(rdeg);
    rcert->excludes(rdia);
    add_common(render, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (dim->parsed()) return run_dim(o, dim_args);
    if (prove->parsed()) return run_prove(o, prove_args);
    if (verify->parsed()) return run_verify(o, verify_file);
    if (hh->parsed()) return run_hh(o, m_max, d_max);
    if (render->parsed()) {
        if (render_cert.empty() && render_args.mults.empty()) render_args.mults = "1";
        return run_render(o, render_args, render_cert, svg);
    }
    return kExitUsage;
}
