#include "ccode/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ccode/io.hpp"

namespace ccode {

namespace {

long env_budget() {
    if (const char* s = std::getenv("CCODE_BUDGET")) {
        long v = std::atol(s);
        if (v > 0) return v;
    }
    return kDefaultBudget;
}

/// Reads a whole code file from a path, with "-" meaning standard input.
CodeFile read_file(const std::string& path, std::istream& in) {
    if (path == "-") return parse_code_file(in);
    std::ifstream f(path);
    if (!f) throw Error("cannot open " + path);
    return parse_code_file(f);
}

const BlockCode& first_code(const CodeFile& f) {
    for (const auto& b : f.blocks)
        if (std::holds_alternative<BlockCode>(b.value)) return std::get<BlockCode>(b.value);
    throw Error("no code block in input");
}

const ConvCode& first_conv(const CodeFile& f) {
    for (const auto& b : f.blocks)
        if (std::holds_alternative<ConvCode>(b.value)) return std::get<ConvCode>(b.value);
    throw Error("no convcode block in input");
}

const ParamClaim* find_claim(const CodeFile& f) {
    for (const auto& b : f.blocks)
        if (std::holds_alternative<ParamClaim>(b.value)) return &std::get<ParamClaim>(b.value);
    return nullptr;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (cur.empty()) throw Error("empty entry in '" + s + "'");
            out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

RowParams parse_params(const std::string& s) {
    RowParams out;
    if (s.empty()) return out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            auto eq = cur.find('=');
            if (eq == std::string::npos) throw Error("expected name=value in '" + cur + "'");
            out[cur.substr(0, eq)] = std::stol(cur.substr(eq + 1));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

std::string params_str(const RowParams& p) {
    std::string s;
    for (const auto& [k, v] : p) {
        if (!s.empty()) s += ',';
        s += k + "=" + std::to_string(v);
    }
    return s;
}

void print_distance(const DistanceResult& d, std::ostream& out) {
    switch (d.mode) {
        case DistanceResult::Mode::exact:
            out << "mode=exact df=" << d.value << " states=" << d.states << " edges=" << d.edges
                << "\n";
            break;
        case DistanceResult::Mode::lower_bound:
            out << "mode=lower-bound df_lower=" << d.value << "\n";
            break;
        case DistanceResult::Mode::bracket:
            out << "mode=bracket df_lower=" << d.value << " df_upper=" << *d.upper
                << " horizon=" << d.horizon_used << "\n";
            break;
    }
}

int print_verify_report(const VerifyReport& r, std::ostream& out) {
    out << "kind=verify\n";
    out << claim_to_line(r.claim) << "\n";
    out << "measured n=" << r.measured_n << " k=" << r.measured_k << " delta=" << r.measured_delta
        << " mu=" << r.measured_mu << "\n";
    out << "basic=" << cert_name(r.basic) << "\n";
    out << "reduced=" << (r.reduced ? "yes" : "no") << "\n";
    out << "distance ";
    print_distance(r.distance, out);
    for (const auto& [name, verdict] : r.items)
        out << "item " << name << "=" << verdict_name(verdict) << "\n";
    const char* overall = r.overall == Overall::ok
                              ? "ok"
                              : (r.overall == Overall::violated ? "violated" : "undetermined");
    out << "overall=" << overall << "\n";
    switch (r.overall) {
        case Overall::ok: return kExitOk;
        case Overall::violated: return kExitViolation;
        default: return kExitUndetermined;
    }
}

// --- family ---

int cmd_family(const std::string& family, long q, long n, long b, long delta, long r, long m,
               std::ostream& out) {
    CodeFile file;
    CodeFileBlock block;
    if (family == "bch") {
        long p = 0, t = 0;
        if (!is_prime_power(q, &p, &t)) throw Error("q must be a prime power");
        block.value = bch_code(Field::make(p, static_cast<int>(t)), static_cast<int>(n),
                               static_cast<int>(b), static_cast<int>(delta));
    } else if (family == "rs") {
        long p = 0, t = 0;
        if (!is_prime_power(q, &p, &t)) throw Error("q must be a prime power");
        if (delta < 1 || delta > n) throw Error("rs needs 1 <= delta <= n");
        block.value = rs_code(Field::make(p, static_cast<int>(t)), static_cast<int>(n),
                              static_cast<int>(n - delta + 1));
    } else if (family == "rm") {
        block.value = rm_code(static_cast<int>(r), static_cast<int>(m));
    } else if (family == "melas") {
        long p = 0, t = 0;
        if (!is_prime_power(q, &p, &t)) throw Error("q must be a prime power");
        block.value = melas_code(Field::make(p, static_cast<int>(t)), static_cast<int>(m));
        block.split_hint = std::vector<int>{static_cast<int>(m), static_cast<int>(m)};
    } else {
        throw Error("unknown family " + family);
    }
    file.blocks.push_back(std::move(block));
    render_code_file(file, out);
    return kExitOk;
}

// --- conv ---

int cmd_from_block(const std::string& input, const std::string& split, const std::string& side,
                   std::istream& in, std::ostream& out) {
    CodeFile f = read_file(input, in);
    std::vector<int> counts;
    if (!split.empty()) {
        counts = parse_int_list(split);
    } else {
        for (const auto& blk : f.blocks)
            if (std::holds_alternative<BlockCode>(blk.value) && blk.split_hint) {
                counts = *blk.split_hint;
                break;
            }
        if (counts.empty()) throw Error("no --split given and the input carries no split hint");
    }
    const BlockCode& c = first_code(f);
    SplitSpec s = side == "generator" ? split_generator(c, counts) : split_parity(c, counts);
    ConvCode v = conv_from_split(s);
    CodeFile outf;
    outf.blocks.push_back({v, std::nullopt});
    render_code_file(outf, out);
    return kExitOk;
}

int cmd_certify(const std::string& input, std::istream& in, std::ostream& out) {
    CodeFile f = read_file(input, in);
    const ConvCode& v = first_conv(f);
    Degrees d = degree_of(v);
    BasicCert bc = is_basic(v);
    out << "kind=certify\n";
    out << "n=" << v.n << " k=" << v.k << " delta=" << d.delta << " mu=" << d.mu
        << " dual_k=" << v.n - v.k << "\n";
    out << "row_degrees=";
    for (size_t i = 0; i < d.row_degrees.size(); ++i)
        out << (i ? "," : "") << d.row_degrees[i];
    out << "\n";
    out << "basic=" << cert_name(bc.verdict) << "\n";
    out << "basic_gcd=" << bc.gcd.to_string() << "\n";
    out << "minors=" << bc.minors_examined << " sampled=" << (bc.sampled ? 1 : 0) << "\n";
    out << "reduced=" << (is_reduced(v) ? "yes" : "no") << "\n";
    return bc.verdict == Cert::undetermined ? kExitUndetermined : kExitOk;
}

int cmd_distance(const std::string& input, const SearchLimits& limits, long budget,
                 std::istream& in, std::ostream& out) {
    CodeFile f = read_file(input, in);
    const ConvCode& v = first_conv(f);
    DistanceResult d = free_distance(v, limits, budget);
    out << "kind=distance\n";
    out << "n=" << v.n << " k=" << v.k << " delta=" << v.delta << " mu=" << v.mu << "\n";
    print_distance(d, out);
    return d.exact() ? kExitOk : kExitUndetermined;
}

// --- transform ---

int cmd_transform(const std::string& op, const std::string& in1, const std::string& in2,
                  int coord, const std::string& basis_kind, long budget, std::istream& in,
                  std::ostream& out, std::ostream& err) {
    CodeFile f1 = read_file(in1, in);
    const ConvCode& v1 = first_conv(f1);
    ConstructionResult res;
    if (op == "expand") {
        FieldPtr field = v1.field;
        if (!field->base()) throw Error("expand needs an extension field");
        Basis beta = basis_kind == "self-dual" ? self_dual_basis(field) : canonical_basis(field);
        res = expand_conv(v1, beta, budget);
    } else if (op == "puncture") {
        if (coord < 0) throw Error("puncture needs --coord");
        res = puncture_conv(v1, coord, budget);
    } else if (op == "extend") {
        res = extend_conv(v1, budget);
    } else if (op == "dsum" || op == "uuv" || op == "product") {
        if (in2.empty()) throw Error(op + " needs a second input");
        CodeFile f2 = read_file(in2, in);
        const ConvCode& v2 = first_conv(f2);
        if (op == "dsum")
            res = direct_sum_conv(v1, v2, budget);
        else if (op == "uuv")
            res = uuv_conv(v1, v2, budget);
        else
            res = product_conv(v1, v2, budget);
    } else {
        throw Error("unknown transform " + op);
    }
    for (const auto& [k, v] : res.info) err << k << "=" << v << "\n";
    CodeFile outf;
    outf.blocks.push_back({res.code, std::nullopt});
    outf.blocks.push_back({res.claim, std::nullopt});
    render_code_file(outf, out);
    return kExitOk;
}

// --- verify ---

int cmd_verify(const std::string& input, const std::string& claim_path,
               const SearchLimits& limits, long budget, std::istream& in, std::ostream& out) {
    CodeFile f = read_file(input, in);
    const ConvCode& v = first_conv(f);
    const ParamClaim* claim = nullptr;
    CodeFile cf;
    if (!claim_path.empty()) {
        cf = read_file(claim_path, in);
        claim = find_claim(cf);
    } else {
        claim = find_claim(f);
    }
    if (!claim) throw Error("no claim block found");
    VerifyReport r = verify_claim(v, *claim, limits, budget);
    return print_verify_report(r, out);
}

// --- table ---

struct SeededRow {
    std::string tag;
    ConstructionResult (*build)(long budget);
};

ConstructionResult seed_claim(ConvCode v, long df_lower, bool df_exact) {
    ConstructionResult res;
    res.claim.n = v.n;
    res.claim.k = v.k;
    res.claim.delta = v.delta;
    res.claim.mu = v.mu;
    res.claim.field_q = v.field->size();
    if (df_exact) {
        res.claim.df_rel = ParamClaim::Rel::ge;
        res.claim.df_value = df_lower;
    }
    res.code = std::move(v);
    return res;
}

const std::vector<SeededRow>& seeded_rows() {
    static const std::vector<SeededRow> rows = {
        {"bch-seeded",
         [](long budget) {
             BlockCode seed = bch_code(Field::prime(2), 15, 1, 5);
             ConvCode v = conv_from_split(split_parity(seed, {4, 4}));
             DistResult dp = min_distance(dual(seed), budget);
             ConstructionResult r = seed_claim(std::move(v), dp.value, dp.exact);
             r.claim.provenance = "bch-seeded";
             return r;
         }},
        {"rs-seeded",
         [](long budget) {
             BlockCode seed = rs_code(Field::prime(5), 4, 2);
             ConvCode v = conv_from_split(split_parity(seed, {1, 1}));
             DistResult dp = min_distance(dual(seed), budget);
             ConstructionResult r = seed_claim(std::move(v), dp.value, dp.exact);
             r.claim.provenance = "rs-seeded";
             return r;
         }},
        {"rm-seeded",
         [](long budget) {
             BlockCode seed = rm_code(1, 3);
             ConvCode v = conv_from_split(split_parity(seed, {2, 2}));
             DistResult dp = min_distance(dual(seed), budget);
             ConstructionResult r = seed_claim(std::move(v), dp.value, dp.exact);
             r.claim.provenance = "rm-seeded";
             return r;
         }},
    };
    return rows;
}

/// Builds the convolutional code matching a constructible table row.
ConvCode build_table_row(const std::string& tag, const RowParams& params, long budget) {
    auto get = [&](const char* name) {
        auto it = params.find(name);
        if (it == params.end()) throw Error(std::string("missing parameter ") + name);
        return it->second;
    };
    if (tag == "melas" || tag == "expanded-melas") {
        long q = get("q"), m = get("m");
        long p = 0, t = 0;
        if (!is_prime_power(q, &p, &t)) throw Error("q must be a prime power");
        FieldPtr fq = Field::make(p, static_cast<int>(t));
        BlockCode seed = melas_code(fq, static_cast<int>(m));
        ConvCode v = conv_from_split(
            split_parity(seed, {static_cast<int>(m), static_cast<int>(m)}));
        if (tag == "melas") return v;
        return expand_conv(v, canonical_basis(fq), budget).code;
    }
    if (tag == "melas-binary") {
        long m = get("m");
        BlockCode seed = melas_code(Field::prime(2), static_cast<int>(m));
        return conv_from_split(split_parity(seed, {static_cast<int>(m), static_cast<int>(m)}));
    }
    throw Error("row " + tag + " has no construction");
}

int cmd_table(const std::string& row, const std::string& params_arg, const std::string& range,
              bool all, bool emit_claim, const SearchLimits& limits, long budget,
              std::ostream& out) {
    struct Instance {
        std::string tag;
        RowParams params;
    };
    std::vector<Instance> instances;
    auto lookup = [&](const std::string& tag) -> const TableRow* {
        for (const TableRow& r : table_rows())
            if (r.tag == tag) return &r;
        return nullptr;
    };
    if (all) {
        for (const TableRow& r : table_rows()) instances.push_back({r.tag, r.smallest});
        for (const SeededRow& r : seeded_rows()) instances.push_back({r.tag, {}});
    } else {
        if (row.empty()) throw Error("table needs --row or --all");
        bool seeded = false;
        for (const SeededRow& r : seeded_rows()) seeded = seeded || r.tag == row;
        const TableRow* def = lookup(row);
        if (!def && !seeded) throw Error("unknown table row " + row);
        RowParams base = def ? def->smallest : RowParams{};
        for (const auto& [k, v] : parse_params(params_arg)) base[k] = v;
        if (!range.empty()) {
            auto eq = range.find('=');
            auto dots = range.find("..");
            if (eq == std::string::npos || dots == std::string::npos || dots < eq)
                throw Error("range must look like name=a..b");
            std::string name = range.substr(0, eq);
            long lo = std::stol(range.substr(eq + 1, dots - eq - 1));
            long hi = std::stol(range.substr(dots + 2));
            if (hi < lo) throw Error("empty range");
            for (long v = lo; v <= hi; ++v) {
                RowParams p = base;
                p[name] = v;
                instances.push_back({row, p});
            }
        } else {
            instances.push_back({row, base});
        }
    }

    bool any_violated = false, any_undet = false;
    if (emit_claim) out << "ccode 1\n";
    for (const Instance& inst : instances) {
        const SeededRow* seeded = nullptr;
        for (const SeededRow& r : seeded_rows())
            if (r.tag == inst.tag) seeded = &r;
        if (seeded) {
            ConstructionResult res = seeded->build(budget);
            if (emit_claim) {
                render_claim(res.claim, out);
                continue;
            }
            out << "row=" << inst.tag << "\n";
            out << "params=" << params_str(inst.params) << "\n";
            out << claim_to_line(res.claim) << "\n";
            out << "constructed=1\n";
            VerifyReport r = verify_claim(res.code, res.claim, limits, budget);
            int rc = print_verify_report(r, out);
            any_violated = any_violated || rc == kExitViolation;
            any_undet = any_undet || rc == kExitUndetermined;
            continue;
        }
        ParamClaim claim = table_params(inst.tag, inst.params);
        if (emit_claim) {
            render_claim(claim, out);
            continue;
        }
        out << "row=" << inst.tag << "\n";
        out << "params=" << params_str(inst.params) << "\n";
        out << claim_to_line(claim) << "\n";
        const TableRow* def = lookup(inst.tag);
        if (def && def->constructible && claim.constraints_ok) {
            ConvCode v = build_table_row(inst.tag, inst.params, budget);
            out << "constructed=1\n";
            VerifyReport r = verify_claim(v, claim, limits, budget);
            int rc = print_verify_report(r, out);
            any_violated = any_violated || rc == kExitViolation;
            any_undet = any_undet || rc == kExitUndetermined;
        } else {
            out << "constructed=0\n";
        }
    }
    return any_violated ? kExitViolation : (any_undet ? kExitUndetermined : kExitOk);
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"finite-field block and convolutional code toolbox"};
    app.require_subcommand(1);
    long budget = env_budget();

    // family
    auto* fam = app.add_subcommand("family", "construct a seed code family");
    std::string fam_name;
    long fq = 2, fn = 0, fb = 1, fdelta = 2, fr = 0, fm = 2;
    fam->add_option("family", fam_name, "bch|rs|rm|melas")->required();
    fam->add_option("--q", fq, "field size");
    fam->add_option("--n", fn, "code length");
    fam->add_option("--b", fb, "first root exponent (bch)");
    fam->add_option("--delta", fdelta, "designed distance (bch, rs)");
    fam->add_option("--r", fr, "order (rm)");
    fam->add_option("--m", fm, "extension degree / rm variables");

    // conv
    auto* conv = app.add_subcommand("conv", "split-built convolutional codes");
    conv->require_subcommand(1);
    auto* fromb = conv->add_subcommand("from-block", "split a block code's matrix");
    std::string fb_input = "-", fb_split, fb_side = "parity";
    fromb->add_option("input", fb_input, "code file or - for stdin");
    fromb->add_option("--split", fb_split, "row counts r0,r1[,r2,r3]");
    fromb->add_option("--side", fb_side, "parity|generator")
        ->check(CLI::IsMember({"parity", "generator"}));
    auto* certi = conv->add_subcommand("certify", "basic/reduced/degree report");
    std::string ct_input = "-";
    certi->add_option("input", ct_input, "convcode file or -");
    auto* cdist = conv->add_subcommand("distance", "free distance search");
    std::string cd_input = "-";
    SearchLimits cd_limits;
    cdist->add_option("input", cd_input, "convcode file or -");
    cdist->add_option("--state-cap", cd_limits.state_cap, "max states for exact search");
    cdist->add_option("--branch-cap", cd_limits.branch_cap, "max branches per state");
    cdist->add_option("--horizon", cd_limits.horizon, "bracket-mode input degree");

    // top-level distance alias
    auto* dist = app.add_subcommand("distance", "free distance search");
    std::string d_input = "-";
    SearchLimits d_limits;
    dist->add_option("input", d_input, "convcode file or -");
    dist->add_option("--state-cap", d_limits.state_cap, "max states for exact search");
    dist->add_option("--branch-cap", d_limits.branch_cap, "max branches per state");
    dist->add_option("--horizon", d_limits.horizon, "bracket-mode input degree");

    // transform
    auto* trans = app.add_subcommand("transform", "new-from-old constructions");
    std::string t_op, t_in1 = "-", t_in2;
    int t_coord = -1;
    std::string t_basis = "canonical";
    trans->add_option("op", t_op, "expand|dsum|puncture|extend|uuv|product")->required();
    trans->add_option("in1", t_in1, "first convcode file or -");
    trans->add_option("in2", t_in2, "second convcode file (dsum, uuv, product)");
    trans->add_option("--coord", t_coord, "coordinate to puncture (0-based)");
    trans->add_option("--basis", t_basis, "canonical|self-dual")
        ->check(CLI::IsMember({"canonical", "self-dual"}));

    // verify
    auto* ver = app.add_subcommand("verify", "check a claim against a convcode");
    std::string v_input = "-", v_claim;
    SearchLimits v_limits;
    ver->add_option("input", v_input, "convcode file or -");
    ver->add_option("--claim", v_claim, "claim file (defaults to a claim block in the input)");
    ver->add_option("--state-cap", v_limits.state_cap, "max states for exact search");
    ver->add_option("--branch-cap", v_limits.branch_cap, "max branches per state");
    ver->add_option("--horizon", v_limits.horizon, "bracket-mode input degree");

    // table
    auto* tab = app.add_subcommand("table", "parameter-table rows and their claims");
    std::string tb_row, tb_params, tb_range;
    bool tb_all = false, tb_emit = false;
    SearchLimits tb_limits;
    tab->add_option("--row", tb_row, "row tag");
    tab->add_option("--params", tb_params, "name=value,... overrides");
    tab->add_option("--range", tb_range, "name=a..b sweep");
    tab->add_flag("--all", tb_all, "every supported row at its smallest parameters");
    tab->add_flag("--emit-claim", tb_emit, "emit claim blocks instead of a report");

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (fam->parsed()) return cmd_family(fam_name, fq, fn, fb, fdelta, fr, fm, out);
        if (conv->parsed()) {
            if (fromb->parsed()) return cmd_from_block(fb_input, fb_split, fb_side, in, out);
            if (certi->parsed()) return cmd_certify(ct_input, in, out);
            if (cdist->parsed()) return cmd_distance(cd_input, cd_limits, budget, in, out);
        }
        if (dist->parsed()) return cmd_distance(d_input, d_limits, budget, in, out);
        if (trans->parsed())
            return cmd_transform(t_op, t_in1, t_in2, t_coord, t_basis, budget, in, out, err);
        if (ver->parsed()) return cmd_verify(v_input, v_claim, v_limits, budget, in, out);
        if (tab->parsed())
            return cmd_table(tb_row, tb_params, tb_range, tb_all, tb_emit, tb_limits, budget, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace ccode
