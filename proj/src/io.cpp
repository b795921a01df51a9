#include "mspace/io.hpp"

#include <cctype>
#include <cstdio>
#include <optional>
#include <sstream>

namespace mspace {

namespace {

struct Cursor {
    std::vector<std::string> lines;
    std::size_t next = 0;

    // next non-blank, non-comment line; returns false at end of input
    bool advance(std::string& out, std::size_t& lineno) {
        while (next < lines.size()) {
            std::string& raw = lines[next];
            std::size_t hash = raw.find('#');
            std::string body = hash == std::string::npos ? raw : raw.substr(0, hash);
            std::size_t b = body.find_first_not_of(" \t\r");
            ++next;
            if (b == std::string::npos) continue;
            std::size_t e = body.find_last_not_of(" \t\r");
            out = body.substr(b, e - b + 1);
            lineno = next; // 1-based
            return true;
        }
        return false;
    }
};

[[noreturn]] void parse_fail(std::size_t lineno, const std::string& what) {
    fail(errc::parse_error, "line " + std::to_string(lineno) + ": " + what);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

bool looks_like_integer(const std::string& t) {
    std::size_t i = t[0] == '-' ? 1 : 0; // GMP rejects a leading '+'
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

Scalar parse_entry(FieldDesc field, const std::string& token, std::size_t lineno) {
    std::size_t slash = token.find('/');
    try {
        if (slash == std::string::npos) {
            if (!looks_like_integer(token)) parse_fail(lineno, "malformed entry '" + token + "'");
            return Scalar(field, mpq_class(mpz_class(token), 1));
        }
        std::string num = token.substr(0, slash), den = token.substr(slash + 1);
        if (!looks_like_integer(num) || !looks_like_integer(den) || den[0] == '-')
            parse_fail(lineno, "malformed entry '" + token + "'");
        mpz_class d(den);
        if (d == 0) parse_fail(lineno, "zero denominator in '" + token + "'");
        return Scalar::fraction(field, mpz_class(num), d);
    } catch (const Error& e) {
        if (e.code() == errc::value_out_of_field)
            fail(errc::value_out_of_field, "line " + std::to_string(lineno) + ": " + e.what());
        throw;
    } catch (const std::invalid_argument&) {
        parse_fail(lineno, "malformed entry '" + token + "'");
    }
}

Matrix parse_matrix(Cursor& cur, FieldDesc field, int n, std::size_t header_line) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) {
        std::string line;
        std::size_t lineno = header_line;
        if (!cur.advance(line, lineno)) parse_fail(lineno, "unexpected end of input inside a matrix");
        std::vector<std::string> toks = split_ws(line);
        if (static_cast<int>(toks.size()) != n)
            parse_fail(lineno, "expected " + std::to_string(n) + " entries, got " +
                                   std::to_string(toks.size()));
        for (int j = 0; j < n; ++j) m.at(i, j) = parse_entry(field, toks[static_cast<std::size_t>(j)], lineno);
    }
    return m;
}

std::string entry_str(const Scalar& s) { return s.str(); }

void write_matrix(std::ostream& os, const Matrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << entry_str(m.at(i, j));
        }
        os << '\n';
    }
}

} // namespace

ParsedSpace parse_mspace(const std::string& text) {
    Cursor cur;
    std::string line;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string::npos) {
            cur.lines.push_back(text.substr(start));
            break;
        }
        cur.lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }

    std::size_t lineno = 0;
    if (!cur.advance(line, lineno)) parse_fail(1, "empty input, expected 'field ...'");
    std::vector<std::string> toks = split_ws(line);
    if (toks.size() != 2 || toks[0] != "field") parse_fail(lineno, "expected 'field <p|rational>'");
    FieldDesc field = FieldDesc::rational();
    if (toks[1] != "rational") {
        if (!looks_like_integer(toks[1])) parse_fail(lineno, "malformed field '" + toks[1] + "'");
        try {
            field = FieldDesc::prime(std::stoll(toks[1]));
        } catch (const Error&) {
            parse_fail(lineno, "'" + toks[1] + "' is not a prime in [2, 2^31)");
        } catch (const std::exception&) {
            parse_fail(lineno, "field order out of range");
        }
    }

    if (!cur.advance(line, lineno)) parse_fail(lineno, "expected 'n <size>'");
    toks = split_ws(line);
    if (toks.size() != 2 || toks[0] != "n" || !looks_like_integer(toks[1]))
        parse_fail(lineno, "expected 'n <size>'");
    long n = std::stol(toks[1]);
    if (n < 1 || n > 64) parse_fail(lineno, "ambient size must be in [1, 64]");

    std::optional<Matrix> offset;
    if (!cur.advance(line, lineno)) parse_fail(lineno, "expected 'offset' or 'space <count>'");
    toks = split_ws(line);
    if (toks.size() == 1 && toks[0] == "offset") {
        offset = parse_matrix(cur, field, static_cast<int>(n), lineno);
        if (!cur.advance(line, lineno)) parse_fail(lineno, "expected 'space <count>'");
        toks = split_ws(line);
    }
    if (toks.size() != 2 || toks[0] != "space" || !looks_like_integer(toks[1]))
        parse_fail(lineno, "expected 'space <count>'");
    long count = std::stol(toks[1]);
    if (count < 0 || count > n * n) parse_fail(lineno, "basis count must be in [0, n^2]");

    std::vector<Matrix> basis;
    for (long k = 0; k < count; ++k)
        basis.push_back(parse_matrix(cur, field, static_cast<int>(n), lineno));

    if (cur.advance(line, lineno)) parse_fail(lineno, "trailing content '" + line + "'");

    MatrixSubspace space = MatrixSubspace::span(field, static_cast<int>(n), basis);
    if (offset) return AffineSpace(std::move(*offset), std::move(space));
    return space;
}

std::string serialize(const MatrixSubspace& v) {
    std::ostringstream os;
    os << "field " << (v.field().is_prime_field() ? std::to_string(v.field().p()) : "rational") << '\n';
    os << "n " << v.ambient() << '\n';
    os << "space " << v.dim() << '\n';
    for (int k = 0; k < v.dim(); ++k) {
        if (k) os << '\n';
        write_matrix(os, v.basis()[static_cast<std::size_t>(k)]);
    }
    return os.str();
}

std::string serialize(const AffineSpace& a) {
    std::ostringstream os;
    os << "field "
       << (a.field().is_prime_field() ? std::to_string(a.field().p()) : "rational") << '\n';
    os << "n " << a.ambient() << '\n';
    os << "offset\n";
    write_matrix(os, a.offset());
    os << "space " << a.dim() << '\n';
    for (int k = 0; k < a.dim(); ++k) {
        if (k) os << '\n';
        write_matrix(os, a.translation().basis()[static_cast<std::size_t>(k)]);
    }
    return os.str();
}

std::string serialize(const ParsedSpace& s) {
    if (std::holds_alternative<MatrixSubspace>(s)) return serialize(std::get<MatrixSubspace>(s));
    return serialize(std::get<AffineSpace>(s));
}

nlohmann::ordered_json matrix_json(const Matrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) {
            const Scalar& e = m.at(i, j);
            if (m.field().is_prime_field())
                row.push_back(e.rep());
            else
                row.push_back(e.str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

nlohmann::ordered_json field_json(const FieldDesc& field) {
    if (field.is_prime_field()) return field.p();
    return "rational";
}

} // namespace

nlohmann::ordered_json decomposition_json(const Decomposition& dec, const FieldDesc& field, int n) {
    nlohmann::ordered_json j;
    j["field"] = field_json(field);
    j["n"] = n;
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (const VeeBlock& b : dec.blocks) {
        nlohmann::ordered_json bj;
        bj["size"] = b.size;
        bj["gram"] = matrix_json(b.gram);
        blocks.push_back(std::move(bj));
    }
    j["blocks"] = std::move(blocks);
    j["basis_change"] = matrix_json(dec.basis_change);
    j["verified"] = dec.verified;
    return j;
}

nlohmann::ordered_json spectrum_json(const SpectrumReport& report, const FieldDesc& field, int n) {
    nlohmann::ordered_json j;
    j["field"] = field_json(field);
    j["n"] = n;
    j["trivial_spectrum"] = report.trivial_spectrum;
    if (report.witness) {
        nlohmann::ordered_json w;
        nlohmann::ordered_json x = nlohmann::ordered_json::array();
        for (const Scalar& e : report.witness->x) x.push_back(e.rep());
        w["x"] = std::move(x);
        w["m"] = matrix_json(report.witness->m);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["totally_intransitive"] = report.totally_intransitive;
    j["maximal"] = report.maximal;
    if (report.irreducible)
        j["irreducible"] = *report.irreducible;
    else
        j["irreducible"] = nullptr;
    return j;
}

nlohmann::ordered_json suite_json(const SuiteReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    nlohmann::ordered_json params;
    for (const auto& [key, value] : report.params) params[key] = value;
    j["params"] = std::move(params);
    j["checks_run"] = report.checks_run;
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const SuiteFailure& f : report.failures) {
        nlohmann::ordered_json fj;
        fj["input"] = f.input;
        fj["expected"] = f.expected;
        fj["actual"] = f.actual;
        failures.push_back(std::move(fj));
    }
    j["failures"] = std::move(failures);
    j["seed"] = report.seed;
    return j;
}

std::string format_suite_text(const SuiteReport& report) {
    std::ostringstream os;
    os << "suite " << report.suite;
    if (!report.params.empty()) {
        os << " (";
        for (std::size_t i = 0; i < report.params.size(); ++i) {
            if (i) os << ", ";
            os << report.params[i].first << "=" << report.params[i].second;
        }
        os << ")";
    }
    os << " seed=" << report.seed << '\n';
    os << "  checks: " << report.checks_run << ", failures: " << report.failures.size() << ", "
       << (report.passed() ? "PASS" : "FAIL");
    char buf[64];
    std::snprintf(buf, sizeof buf, " [%.3f s]", report.elapsed_seconds);
    os << buf << '\n';
    for (const SuiteFailure& f : report.failures)
        os << "  FAIL " << f.input << ": expected " << f.expected << ", got " << f.actual << '\n';
    return os.str();
}

} // namespace mspace
