#include "cli.hpp"

#include "hecke/classify.hpp"
#include "hecke/crystal.hpp"
#include "hecke/error.hpp"
#include "hecke/fock.hpp"
#include "hecke/pathalg.hpp"
#include "hecke/quiver.hpp"
#include "hecke/strings.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#ifndef HECKE_FIXTURE_HASH
#define HECKE_FIXTURE_HASH "unknown"
#endif

namespace hecke::cli {

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Integers as JSON numbers when they fit, otherwise as decimal strings.
json big_json(const BigInt& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return static_cast<long long>(x);
    return x.str();
}

json bip_list(const std::vector<Bipartition>& bs) {
    json a = json::array();
    for (const auto& b : bs) a.push_back(to_string(b));
    return a;
}

struct Globals {
    bool json_out = false;
    int threads = 0;
};

struct ClassifyArgs {
    std::string type;
    bool two_param = false;
    int n = 0;
    int e = 0;
    bool separated = false;
    std::optional<int> f;
    bool with_poincare = false;
};

struct CrystalArgs {
    int n = 0;
    int e = 2;
    int f = 0;
};

struct DecompArgs {
    CrystalArgs c;
    std::string block;
};

struct CanonicalArgs {
    std::string mu;
    int e = 2;
    int f = 0;
};

struct OrbitArgs {
    std::string file;
    std::string word;
    int steps = 10;
};

struct QuiverArgs {
    std::string file;
    bool ext_symmetric = false;
    int tits_bound = 3;
};

json block_simples_json(const std::optional<std::vector<int>>& counts) {
    if (!counts) return nullptr;
    return *counts;
}

void cmd_classify(const ClassifyArgs& a, const Globals& g, std::ostream& out) {
    json j;
    if (a.two_param) {
        if (!a.type.empty()) throw Error(ErrorKind::Parse, "--type cannot be combined with --two-param");
        if (a.separated == a.f.has_value()) throw Error(ErrorKind::Parse, "give exactly one of --separated and --f");
        TwoParamSpec s{a.n, a.e, a.separated, a.f.value_or(0)};
        const RepType t = rep_type_two_param(s);
        j["verdict"] = verdict_text(t);
        j["phi_multiplicity"] = nullptr;
        if (!a.separated) j["f_normalized"] = normalize_f(s.f, s.e);
        j["citations"] = citations_two_param(s);
        j["block_simples"] = block_simples_json(finite_block_simple_counts(s));
    } else {
        if (a.type.empty()) throw Error(ErrorKind::Parse, "--type or --two-param is required");
        const WeylSpec w = parse_weyl_type(a.type);
        const RepType t = rep_type_general(w, a.e);
        j["type"] = to_string(w);
        j["verdict"] = verdict_text(t);
        j["phi_multiplicity"] = phi_multiplicity(w, a.e);
        if (a.with_poincare) j["poincare"] = to_string(poincare(w));
        j["citations"] = citations_general(w);
        std::optional<std::vector<int>> simples;
        if (w.factors.size() == 1) {
            const WeylFactor& f = w.factors[0];
            if (f.family == WeylFamily::A) simples = finite_block_simple_counts_A(f.n, a.e);
            if (f.family == WeylFamily::B)
                simples = finite_block_simple_counts(a.e % 2 == 1 ? TwoParamSpec{f.n, a.e, true, 0}
                                                                  : TwoParamSpec{f.n, a.e, false, a.e / 2 + 1});
        }
        j["block_simples"] = block_simples_json(simples);
    }
    if (g.json_out) {
        out << j.dump(2) << '\n';
        return;
    }
    out << "verdict: " << j["verdict"].get<std::string>() << '\n';
    if (!j["phi_multiplicity"].is_null()) out << "phi multiplicity: " << j["phi_multiplicity"].get<int>() << '\n';
    if (j.contains("poincare")) out << "poincare: " << j["poincare"].get<std::string>() << '\n';
    if (!j["block_simples"].is_null()) out << "simples per non-semisimple block: " << j["block_simples"].dump() << '\n';
    for (const auto& c : j["citations"]) out << "by: " << c.get<std::string>() << '\n';
}

CrystalConfig make_config(int e, int f) {
    CrystalConfig cfg{e, f};
    cfg.validate();
    return cfg;
}

std::vector<int> parse_block(const std::string& text, int n, const CrystalConfig& cfg) {
    if (!text.empty() && text.front() == '[') {
        const Bipartition b = parse_bipartition(text);
        if (b.size() != n) throw Error(ErrorKind::SizeMismatch, "block representative " + text + " is not of size n");
        return block_key(b, cfg);
    }
    std::vector<int> key;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            key.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Parse, "bad residue count '" + item + "' in --block");
        }
    }
    if (static_cast<int>(key.size()) != cfg.e)
        throw Error(ErrorKind::Parse, "--block needs e residue counts or a bipartition");
    int total = 0;
    for (int k : key) {
        if (k < 0) throw Error(ErrorKind::Parse, "negative residue count in --block");
        total += k;
    }
    if (total != n) throw Error(ErrorKind::SizeMismatch, "--block residue counts do not sum to n");
    return key;
}

void cmd_decomp(const DecompArgs& a, const Globals& g, std::ostream& out) {
    const CrystalConfig cfg = make_config(a.c.e, a.c.f);
    if (a.c.n < 0) throw Error(ErrorKind::BadConfig, "n must be nonnegative");
    std::optional<std::vector<int>> key;
    if (!a.block.empty()) key = parse_block(a.block, a.c.n, cfg);
    const DecompositionMatrix d = decomposition_matrix(a.c.n, cfg, key ? &*key : nullptr);
    if (g.json_out) {
        json j;
        j["rows"] = bip_list(d.rows);
        j["cols"] = bip_list(d.cols);
        j["entries"] = json::array();
        j["polys"] = json::array();
        for (size_t r = 0; r < d.rows.size(); ++r) {
            json er = json::array(), pr = json::array();
            for (size_t c = 0; c < d.cols.size(); ++c) {
                er.push_back(big_json(d.entry(r, c)));
                pr.push_back(to_string(d.polys[r][c]));
            }
            j["entries"].push_back(er);
            j["polys"].push_back(pr);
        }
        out << j.dump(2) << '\n';
        return;
    }
    size_t w = 0;
    for (const auto& r : d.rows) w = std::max(w, to_string(r).size());
    std::vector<std::vector<std::string>> cells(d.rows.size());
    std::vector<size_t> cw;
    for (const auto& c : d.cols) cw.push_back(to_string(c).size());
    for (size_t r = 0; r < d.rows.size(); ++r)
        for (size_t c = 0; c < d.cols.size(); ++c) {
            std::string s = d.polys[r][c].is_zero() ? "." : to_string(d.polys[r][c]);
            cw[c] = std::max(cw[c], s.size());
            cells[r].push_back(std::move(s));
        }
    auto pad = [](const std::string& s, size_t n) { return s + std::string(n - s.size(), ' '); };
    out << pad("", w);
    for (size_t c = 0; c < d.cols.size(); ++c) out << "  " << pad(to_string(d.cols[c]), cw[c]);
    out << '\n';
    for (size_t r = 0; r < d.rows.size(); ++r) {
        out << pad(to_string(d.rows[r]), w);
        for (size_t c = 0; c < d.cols.size(); ++c) out << "  " << pad(cells[r][c], cw[c]);
        out << '\n';
    }
}

void cmd_crystal(const CrystalArgs& a, bool dot, const Globals& g, std::ostream& out) {
    const CrystalConfig cfg = make_config(a.e, a.f);
    if (a.n < 0) throw Error(ErrorKind::BadConfig, "n must be nonnegative");
    std::vector<std::vector<Bipartition>> layers;
    std::vector<CrystalEdge> edges;
    for (int k = 0; k <= a.n; ++k) {
        layers.push_back(crystal_layer(k, cfg));
        if (k > 0) {
            auto into = crystal_edges_into(k, cfg);
            edges.insert(edges.end(), into.begin(), into.end());
        }
    }
    if (dot) {
        out << "digraph crystal {\n";
        for (const auto& layer : layers)
            for (const auto& b : layer) out << "  \"" << to_string(b) << "\";\n";
        for (const auto& e : edges)
            out << "  \"" << to_string(e.from) << "\" -> \"" << to_string(e.to) << "\" [label=\"" << e.residue << "\"];\n";
        out << "}\n";
        return;
    }
    if (g.json_out) {
        json j;
        j["layers"] = json::array();
        for (const auto& layer : layers) j["layers"].push_back(bip_list(layer));
        j["edges"] = json::array();
        for (const auto& e : edges)
            j["edges"].push_back({{"from", to_string(e.from)}, {"to", to_string(e.to)}, {"residue", e.residue}});
        out << j.dump(2) << '\n';
        return;
    }
    for (size_t k = 0; k < layers.size(); ++k) {
        out << "n=" << k << ":";
        for (const auto& b : layers[k]) out << ' ' << to_string(b);
        out << '\n';
    }
    for (const auto& e : edges) out << to_string(e.from) << " -" << e.residue << "-> " << to_string(e.to) << '\n';
}

void cmd_canonical(const CanonicalArgs& a, const Globals& g, std::ostream& out) {
    const CrystalConfig cfg = make_config(a.e, a.f);
    const Bipartition mu = parse_bipartition(a.mu);
    const CanonicalElement el = canonical_basis(mu, cfg);
    std::vector<std::pair<Bipartition, LaurentPoly>> terms(el.vec.terms().begin(), el.vec.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return total_order_less(x.first, y.first); });
    if (g.json_out) {
        json j;
        j["mu"] = to_string(el.mu);
        j["terms"] = json::array();
        for (const auto& [b, p] : terms) j["terms"].push_back({{"lambda", to_string(b)}, {"coeff", to_string(p)}});
        j["seed"] = to_string(el.seed);
        j["seed_from_g"] = el.seed_from_g;
        j["pure_monomial"] = el.pure_monomial;
        out << j.dump(2) << '\n';
        return;
    }
    out << "G" << to_string(el.mu) << " =";
    bool first = true;
    for (const auto& [b, p] : terms) {
        out << (first ? " " : " + ") << '(' << to_string(p) << ')' << to_string(b);
        first = false;
    }
    out << '\n' << "seed: " << to_string(el.seed) << (el.seed_from_g ? " applied to G" : "")
        << (el.pure_monomial ? " (no corrections)" : "") << '\n';
}

void cmd_ar_orbit(const OrbitArgs& a, const Globals& g, std::ostream& out) {
    const StringAlgebra alg(parse_presentation(read_file(a.file)));
    if (a.steps < 0) throw Error(ErrorKind::BadConfig, "--steps must be nonnegative");
    StringWord w = parse_string(alg.quiver(), a.word);
    if (!validate_string(w, alg)) throw Error(ErrorKind::Parse, "'" + a.word + "' is not a string of this algebra");
    std::vector<StringWord> orbit{w};
    for (int k = 0; k < a.steps; ++k) orbit.push_back(ar_translate(orbit.back(), alg));
    std::vector<long long> dims;
    for (const auto& s : orbit) dims.push_back(s.dimension());
    std::optional<ComplexityEstimate> cx;
    if (dims.size() >= 6) cx = complexity_estimate(dims);
    if (g.json_out) {
        json j;
        j["orbit"] = json::array();
        for (const auto& s : orbit) j["orbit"].push_back(to_string(alg.quiver(), s));
        j["dims"] = dims;
        j["complexity"] = cx ? json(cx->complexity) : json(nullptr);
        if (cx) j["complexity_note"] = cx->note;
        out << j.dump(2) << '\n';
        return;
    }
    for (size_t k = 0; k < orbit.size(); ++k)
        out << "tau^" << k << ": " << to_string(alg.quiver(), orbit[k]) << "  (dim " << dims[k] << ")\n";
    if (cx) out << "complexity estimate: " << cx->complexity << " (" << cx->note << ")\n";
}

void cmd_quiver_check(const QuiverArgs& a, const Globals& g, std::ostream& out) {
    const Quiver q = parse_quiver(read_file(a.file));
    json j;
    j["nodes"] = q.num_nodes();
    j["arrows"] = q.arrows().size();
    j["graph_class"] = classify_underlying(q).name();
    try {
        j["path_algebra"] = to_string(path_algebra_rep_type(q));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotAcyclic) throw;
        j["path_algebra"] = nullptr;
    }
    j["radical_square_zero"] = to_string(radical_square_zero_rep_type(q));
    const TitsSweep sweep = tits_sweep(q, a.tits_bound);
    json t{{"bound", a.tits_bound}, {"positive", sweep.positive}, {"nonnegative", sweep.nonnegative}};
    t["negative_witness"] = sweep.negative_witness ? json(*sweep.negative_witness) : json(nullptr);
    t["radical_witness"] = sweep.radical_witness ? json(*sweep.radical_witness) : json(nullptr);
    j["tits"] = t;
    const auto wit = find_wild_pattern(q, a.ext_symmetric);
    if (wit) {
        json nodes = json::array();
        for (int v : wit->nodes) nodes.push_back(q.nodes()[static_cast<size_t>(v)]);
        j["wild_witness"] = {{"pattern", wit->pattern}, {"nodes", nodes}, {"detail", wit->detail}};
    } else {
        j["wild_witness"] = nullptr;
    }
    if (g.json_out) {
        out << j.dump(2) << '\n';
        return;
    }
    out << "underlying graph: " << j["graph_class"].get<std::string>() << '\n';
    out << "path algebra: " << (j["path_algebra"].is_null() ? "not acyclic" : j["path_algebra"].get<std::string>()) << '\n';
    out << "radical square zero: " << j["radical_square_zero"].get<std::string>() << '\n';
    out << "tits form on [0," << a.tits_bound << "]: " << (sweep.positive ? "positive" : sweep.nonnegative ? "nonnegative" : "indefinite")
        << '\n';
    if (wit) out << "wild pattern: " << wit->pattern << " at " << j["wild_witness"]["nodes"].dump() << '\n';
    else out << "wild pattern: none\n";
}

void cmd_algebra_dim(const std::string& file, const Globals& g, std::ostream& out) {
    const AlgebraPresentation p = parse_presentation(read_file(file));
    const PathBasis basis = quotient_basis(p);
    std::vector<std::string> names;
    for (const auto& path : basis.all()) names.push_back(to_string(p.quiver, path));
    if (g.json_out) {
        json j{{"dimension", basis.dimension()}, {"nilpotency_index", basis.nilpotency_index}, {"basis", names}};
        out << j.dump(2) << '\n';
        return;
    }
    out << "dimension: " << basis.dimension() << '\n' << "radical nilpotency index: " << basis.nilpotency_index << '\n';
    out << "basis:";
    for (const auto& s : names) out << ' ' << s;
    out << '\n';
}

void cmd_algebra_class(const std::string& file, const Globals& g, std::ostream& out) {
    const AlgebraPresentation p = parse_presentation(read_file(file));
    const int dim = quotient_basis(p).dimension();
    const BiserialReport sb = is_special_biserial(p);
    const bool string_alg = sb.special_biserial && is_string_algebra(p);
    if (g.json_out) {
        json j{{"dimension", dim}, {"special_biserial", sb.special_biserial}, {"string_algebra", string_alg}};
        j["violation"] = sb.violation.empty() ? json(nullptr) : json(sb.violation);
        out << j.dump(2) << '\n';
        return;
    }
    out << "dimension: " << dim << '\n';
    out << "special biserial: " << (sb.special_biserial ? "yes" : "no (" + sb.violation + ")") << '\n';
    out << "string algebra: " << (string_alg ? "yes" : "no") << '\n';
}

}  // namespace

std::string version() { return std::string("hecke 0.1.0 (fixtures ") + HECKE_FIXTURE_HASH + ")"; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Representation type and canonical bases for Hecke algebras of classical type", "hecke"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json_out, "Machine-readable output");
    app.add_option("--threads", g.threads, "Worker threads for parallel kernels")->check(CLI::NonNegativeNumber);

    ClassifyArgs ca;
    auto* classify = app.add_subcommand("classify", "Representation type of a Hecke algebra");
    classify->add_option("--type", ca.type, "Weyl type such as B4xA3xD5");
    classify->add_flag("--two-param", ca.two_param, "Type B with independent parameters");
    classify->add_option("--n", ca.n, "Rank for --two-param");
    classify->add_option("--e", ca.e, "Quantum characteristic")->required();
    classify->add_flag("--separated", ca.separated, "-Q is not a power of q");
    classify->add_option("--f", ca.f, "Q = -q^f");
    classify->add_flag("--poincare", ca.with_poincare, "Also print the Poincare polynomial");

    DecompArgs da;
    auto* decomp = app.add_subcommand("decomp", "Graded decomposition matrix");
    decomp->add_option("--n", da.c.n)->required();
    decomp->add_option("--e", da.c.e)->required();
    decomp->add_option("--f", da.c.f)->required();
    decomp->add_option("--block", da.block, "Residue counts c0,...,c(e-1) or a bipartition in the block");

    CrystalArgs cr;
    bool dot = false;
    auto* crystal = app.add_subcommand("crystal", "Kleshchev crystal up to size n");
    crystal->add_option("--n", cr.n)->required();
    crystal->add_option("--e", cr.e)->required();
    crystal->add_option("--f", cr.f)->required();
    crystal->add_flag("--dot", dot, "Graphviz output");

    CanonicalArgs cn;
    auto* canonical = app.add_subcommand("canonical", "Canonical basis element G(mu)");
    canonical->add_option("--mu", cn.mu, "Kleshchev bipartition such as [2,1|1]")->required();
    canonical->add_option("--e", cn.e)->required();
    canonical->add_option("--f", cn.f)->required();

    OrbitArgs oa;
    auto* orbit = app.add_subcommand("ar-orbit", "Auslander-Reiten orbit of a string module");
    orbit->add_option("algebra", oa.file, "Presentation file")->required();
    orbit->add_option("string", oa.word, "String such as '<nu >beta' or @2")->required();
    orbit->add_option("--steps", oa.steps, "Number of translates")->check(CLI::NonNegativeNumber);

    QuiverArgs qa;
    auto* quiver = app.add_subcommand("quiver-check", "Underlying graph, representation type and wild patterns");
    quiver->add_option("quiver", qa.file, "Quiver file")->required();
    quiver->add_flag("--ext-symmetric", qa.ext_symmetric, "Gabriel quiver of an algebra with symmetric Ext");
    quiver->add_option("--tits-bound", qa.tits_bound, "Box bound for the Tits form sweep")->check(CLI::PositiveNumber);

    std::string dim_file;
    auto* adim = app.add_subcommand("algebra-dim", "Dimension and basis of a bound quiver algebra");
    adim->add_option("algebra", dim_file, "Presentation file")->required();

    std::string class_file;
    auto* aclass = app.add_subcommand("algebra-class", "Special biserial and string algebra tests");
    aclass->add_option("algebra", class_file, "Presentation file")->required();

    std::vector<std::string> argv_store{"hecke"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

#ifdef _OPENMP
    if (g.threads > 0) omp_set_num_threads(g.threads);
#endif

    try {
        if (classify->parsed()) cmd_classify(ca, g, out);
        else if (decomp->parsed()) cmd_decomp(da, g, out);
        else if (crystal->parsed()) cmd_crystal(cr, dot, g, out);
        else if (canonical->parsed()) cmd_canonical(cn, g, out);
        else if (orbit->parsed()) cmd_ar_orbit(oa, g, out);
        else if (quiver->parsed()) cmd_quiver_check(qa, g, out);
        else if (adim->parsed()) cmd_algebra_dim(dim_file, g, out);
        else if (aclass->parsed()) cmd_algebra_class(class_file, g, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::Parse ? 2 : 1;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace hecke::cli
