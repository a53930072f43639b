#include "ccode/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace ccode {

namespace {

constexpr const char* kHeader = "ccode 1";

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

/// key=value tokens after a fixed leading word.
std::map<std::string, std::string> kv_of(const std::vector<std::string>& toks, size_t from) {
    std::map<std::string, std::string> out;
    for (size_t i = from; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos) throw Error("expected key=value, got '" + toks[i] + "'");
        out[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
    }
    return out;
}

long long_of(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error("missing key " + key);
    return std::stol(it->second);
}

std::vector<int> int_list_of(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (cur.empty()) throw Error("empty entry in list '" + s + "'");
            out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

std::string int_list_str(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next non-empty line; empty optional at end of input.
    std::optional<std::string> next() {
        if (peeked_) {
            auto l = std::move(*peeked_);
            peeked_.reset();
            return l;
        }
        std::string line;
        while (std::getline(in_, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            bool blank = line.find_first_not_of(" \t") == std::string::npos;
            if (!blank) return line;
        }
        return std::nullopt;
    }
    void push_back(std::string line) { peeked_ = std::move(line); }

private:
    std::istream& in_;
    std::optional<std::string> peeked_;
};

FieldPtr parse_field_line(const std::string& line) {
    auto toks = tokens_of(line);
    if (toks.empty() || toks[0] != "field") throw Error("expected a field line");
    auto kv = kv_of(toks, 1);
    long p = long_of(kv, "p");
    long m = long_of(kv, "m");
    auto it = kv.find("modulus");
    if (it == kv.end()) throw Error("field line lacks a modulus");
    return Field::make(p, static_cast<int>(m), int_list_of(it->second));
}

std::string field_line(const Field& f) {
    if (f.base() && f.base()->base())
        throw Error("only fields over the prime field are representable in files");
    return "field p=" + std::to_string(f.characteristic()) + " m=" + std::to_string(f.degree()) +
           " modulus=" + int_list_str(f.modulus());
}

Matrix parse_matrix(LineReader& rd, const FieldPtr& f) {
    auto head = rd.next();
    if (!head) throw Error("unexpected end of file: matrix expected");
    auto toks = tokens_of(*head);
    if (toks.empty() || toks[0] != "matrix") throw Error("expected a matrix block");
    auto kv = kv_of(toks, 1);
    int rows = static_cast<int>(long_of(kv, "rows"));
    int cols = static_cast<int>(long_of(kv, "cols"));
    Matrix m(f, rows, cols);
    for (int r = 0; r < rows; ++r) {
        auto line = rd.next();
        if (!line) throw Error("matrix row missing");
        auto vals = tokens_of(*line);
        if (static_cast<int>(vals.size()) != cols) throw Error("matrix row has wrong width");
        for (int c = 0; c < cols; ++c) m.at(r, c) = std::stoi(vals[c]);
    }
    m.check_entries();
    return m;
}

void render_matrix(const Matrix& m, std::ostream& out) {
    out << "matrix rows=" << m.rows() << " cols=" << m.cols() << "\n";
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << m.at(r, c);
        }
        out << "\n";
    }
}

BlockCode parse_code_block(LineReader& rd, const std::string& head,
                           std::optional<std::vector<int>>* hint) {
    auto kv = kv_of(tokens_of(head), 1);
    long n = long_of(kv, "n");
    long k = long_of(kv, "k");
    auto fline = rd.next();
    if (!fline) throw Error("code block lacks a field");
    FieldPtr f = parse_field_line(*fline);

    auto next = rd.next();
    if (next) {
        auto toks = tokens_of(*next);
        if (!toks.empty() && toks[0].rfind("split_hint=", 0) == 0) {
            auto hkv = kv_of(toks, 0);
            if (hint) *hint = int_list_of(hkv.at("split_hint"));
            next = rd.next();
        }
    }
    if (!next || *next != "generator") throw Error("code block lacks a generator");
    Matrix g = parse_matrix(rd, f);

    std::optional<Matrix> h;
    next = rd.next();
    if (next && *next == "parity") {
        h = parse_matrix(rd, f);
    } else if (next) {
        rd.push_back(*next);
    }

    BlockCode c = code_from_generator(g);
    if (c.n != n || c.k != k)
        throw Error("code block header disagrees with the generator matrix");
    if (g.rows() == c.k) c.G = g;  // keep the caller's rows when independent
    if (h) {
        if (rank_of(*h) != h->rows() || h->rows() != c.n - c.k ||
            !mat_mul(c.G, transpose(*h)).is_zero())
            throw Error("parity block is not a parity check of the generator");
        c.H = *h;
    }
    return c;
}

void render_code_block(const BlockCode& c, std::ostream& out,
                       const std::optional<std::vector<int>>& hint) {
    out << "code n=" << c.n << " k=" << c.k << "\n";
    out << field_line(*c.field) << "\n";
    if (hint) out << "split_hint=" << int_list_str(*hint) << "\n";
    out << "generator\n";
    render_matrix(c.G, out);
    out << "parity\n";
    render_matrix(c.H, out);
}

ConvCode parse_conv_block(LineReader& rd, const std::string& head) {
    auto kv = kv_of(tokens_of(head), 1);
    long n = long_of(kv, "n");
    long k = long_of(kv, "k");
    long mu = long_of(kv, "mu");
    auto fline = rd.next();
    if (!fline) throw Error("convcode block lacks a field");
    FieldPtr f = parse_field_line(*fline);
    std::vector<Matrix> coeff;
    for (long i = 0; i <= mu; ++i) {
        auto cline = rd.next();
        if (!cline) throw Error("coefficient block missing");
        auto toks = tokens_of(*cline);
        if (toks.empty() || toks[0] != "coeff") throw Error("expected a coeff block");
        if (long_of(kv_of(toks, 1), "i") != i) throw Error("coefficient blocks out of order");
        coeff.push_back(parse_matrix(rd, f));
    }

    std::optional<SplitSide> side;
    std::vector<int> counts;
    auto next = rd.next();
    if (next) {
        auto toks = tokens_of(*next);
        if (!toks.empty() && toks[0] == "split") {
            auto skv = kv_of(toks, 1);
            std::string s = skv.at("side");
            if (s == "parity")
                side = SplitSide::parity;
            else if (s == "generator")
                side = SplitSide::generator;
            else
                throw Error("unknown split side " + s);
            counts = int_list_of(skv.at("counts"));
        } else {
            rd.push_back(*next);
        }
    }

    ConvCode v;
    if (side) {
        auto chead = rd.next();
        if (!chead || tokens_of(*chead).at(0) != "code")
            throw Error("split provenance lacks its source code block");
        BlockCode src = parse_code_block(rd, *chead, nullptr);
        SplitSpec s = *side == SplitSide::parity ? split_parity(src, counts)
                                                 : split_generator(src, counts);
        v = conv_from_split(s);
        for (long i = 0; i <= mu; ++i)
            if (!(v.coeff[i] == coeff[i]))
                throw Error("convcode coefficients disagree with the recorded split");
    } else {
        v = conv_from_coeffs(f, coeff);
    }
    if (v.n != n || v.k != k || v.mu != mu)
        throw Error("convcode header disagrees with its coefficient matrices");
    return v;
}

void render_conv_block(const ConvCode& v, std::ostream& out) {
    out << "convcode n=" << v.n << " k=" << v.k << " mu=" << v.mu << "\n";
    out << field_line(*v.field) << "\n";
    for (int i = 0; i <= v.mu; ++i) {
        out << "coeff i=" << i << "\n";
        render_matrix(v.coeff[i], out);
    }
    if (v.split) {
        out << "split side=" << (v.split->side == SplitSide::parity ? "parity" : "generator")
            << " counts=" << int_list_str(v.split->row_counts) << "\n";
        render_code_block(v.split->source, out, std::nullopt);
    }
}

}  // namespace

std::string claim_to_line(const ParamClaim& c) {
    auto num = [](long v) { return v < 0 ? std::string("*") : std::to_string(v); };
    std::string s = "claim q=" + std::to_string(c.field_q) + " n=" + num(c.n) +
                    " k=" + num(c.k) + " delta=" + num(c.delta) + " mu=" + num(c.mu) +
                    " df=" + df_bound_to_string(c.df_rel, c.df_value) +
                    " provenance=" + (c.provenance.empty() ? "-" : c.provenance) +
                    " constraints_ok=" + (c.constraints_ok ? "1" : "0");
    if (c.df_of_dual) s += " df_dual=1";
    if (c.delta_max) s += " delta_max=" + std::to_string(*c.delta_max);
    if (c.extrapolated) s += " extrapolated=1";
    if (!c.interpretation.empty()) s += " interpretation=" + c.interpretation;
    return s;
}

ParamClaim claim_from_line(const std::string& line) {
    auto toks = tokens_of(line);
    if (toks.empty() || toks[0] != "claim") throw Error("expected a claim line");
    auto kv = kv_of(toks, 1);
    ParamClaim c;
    auto num = [&](const std::string& key) -> long {
        auto it = kv.find(key);
        if (it == kv.end()) throw Error("claim lacks " + key);
        return it->second == "*" ? -1 : std::stol(it->second);
    };
    c.field_q = long_of(kv, "q");
    c.n = num("n");
    c.k = num("k");
    c.delta = num("delta");
    c.mu = num("mu");
    std::string df = kv.at("df");
    if (df == "*") {
        c.df_rel = ParamClaim::Rel::none;
    } else {
        auto colon = df.find(':');
        if (colon == std::string::npos) throw Error("malformed df bound " + df);
        std::string rel = df.substr(0, colon);
        c.df_value = std::stol(df.substr(colon + 1));
        if (rel == "ge")
            c.df_rel = ParamClaim::Rel::ge;
        else if (rel == "gt")
            c.df_rel = ParamClaim::Rel::gt;
        else if (rel == "eq")
            c.df_rel = ParamClaim::Rel::eq;
        else
            throw Error("unknown df relation " + rel);
    }
    c.provenance = kv.at("provenance") == "-" ? "" : kv.at("provenance");
    c.constraints_ok = long_of(kv, "constraints_ok") != 0;
    if (kv.count("df_dual")) c.df_of_dual = kv.at("df_dual") == "1";
    if (kv.count("delta_max")) c.delta_max = std::stol(kv.at("delta_max"));
    if (kv.count("extrapolated")) c.extrapolated = kv.at("extrapolated") == "1";
    if (kv.count("interpretation")) c.interpretation = kv.at("interpretation");
    return c;
}

CodeFile parse_code_file(std::istream& in) {
    LineReader rd(in);
    auto header = rd.next();
    if (!header || *header != kHeader) throw Error("missing file header '" + std::string(kHeader) + "'");
    CodeFile file;
    while (auto line = rd.next()) {
        auto toks = tokens_of(*line);
        if (toks.empty()) continue;
        CodeFileBlock block;
        if (toks[0] == "code") {
            std::optional<std::vector<int>> hint;
            block.value = parse_code_block(rd, *line, &hint);
            block.split_hint = hint;
        } else if (toks[0] == "convcode") {
            block.value = parse_conv_block(rd, *line);
        } else if (toks[0] == "claim") {
            block.value = claim_from_line(*line);
        } else {
            throw Error("unknown block '" + toks[0] + "'");
        }
        file.blocks.push_back(std::move(block));
    }
    if (file.blocks.empty()) throw Error("file holds no blocks");
    return file;
}

void render_code(const BlockCode& c, std::ostream& out,
                 const std::optional<std::vector<int>>& split_hint) {
    render_code_block(c, out, split_hint);
}
void render_convcode(const ConvCode& v, std::ostream& out) { render_conv_block(v, out); }
void render_claim(const ParamClaim& c, std::ostream& out) { out << claim_to_line(c) << "\n"; }

void render_code_file(const CodeFile& f, std::ostream& out) {
    out << kHeader << "\n";
    for (const CodeFileBlock& b : f.blocks) {
        if (std::holds_alternative<BlockCode>(b.value))
            render_code_block(std::get<BlockCode>(b.value), out, b.split_hint);
        else if (std::holds_alternative<ConvCode>(b.value))
            render_conv_block(std::get<ConvCode>(b.value), out);
        else
            render_claim(std::get<ParamClaim>(b.value), out);
    }
}

std::string render_to_string(const CodeFile& f) {
    std::ostringstream ss;
    render_code_file(f, ss);
    return ss.str();
}

CodeFile parse_from_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_code_file(ss);
}

}  // namespace ccode
