#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "fermat/eliminate.hpp"
#include "fermat/errors.hpp"

namespace fermat {

namespace {

std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream is(line);
    std::vector<std::string> out;
    for (std::string t; is >> t;)
        out.push_back(t);
    return out;
}

std::string strip_comment(const std::string& line)
{
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

long parse_prefixed(const std::string& token, const std::string& prefix, std::size_t line)
{
    if (token.rfind(prefix, 0) != 0)
        throw DataError("expected '" + prefix + "...', got '" + token + "'", line);
    try {
        return parse_integer(token.substr(prefix.size())).get_si();
    } catch (const DataError& e) {
        throw DataError(e.what(), line);
    }
}

std::vector<Rational> parse_rationals(const std::string& text, std::size_t line)
{
    std::vector<Rational> out;
    std::size_t start = 0;
    try {
        while (true) {
            auto pos = text.find(',', start);
            out.push_back(parse_rational(text.substr(start, pos - start)));
            if (pos == std::string::npos)
                break;
            start = pos + 1;
        }
    } catch (const DataError& e) {
        throw DataError(e.what(), line);
    }
    return out;
}

struct OpenForm
{
    EigenformRecord record;
    std::vector<std::complex<long double>> roots;
};

} // namespace

ParsedForms parse_forms(std::istream& in)
{
    ParsedForms out;
    std::optional<QuadraticField> field;
    int level = 0;
    std::optional<OpenForm> current;

    auto close_form = [&]() {
        if (current) {
            out.records.push_back(std::move(current->record));
            current.reset();
        }
    };

    std::string raw;
    for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
        const std::vector<std::string> tok = tokens(strip_comment(raw));
        if (tok.empty())
            continue;

        if (tok[0] == "field") {
            close_form();
            if (tok.size() != 4 || tok[2] != "level")
                throw DataError("expected 'field d=<d> level lambda^<e>'", lineno);
            const long d = parse_prefixed(tok[1], "d=", lineno);
            try {
                field = QuadraticField::supported(d);
            } catch (const DomainError& e) {
                throw DataError(e.what(), lineno);
            }
            level = static_cast<int>(parse_prefixed(tok[3], "lambda^", lineno));
            if (level < 1 || level > 3)
                throw DataError("level exponent must be 1, 2 or 3", lineno);
            const LevelBlock block{d, level};
            if (std::find(out.blocks.begin(), out.blocks.end(), block) == out.blocks.end())
                out.blocks.push_back(block);
        } else if (tok[0] == "form") {
            close_form();
            if (!field)
                throw DataError("'form' before any 'field' header", lineno);
            if (tok.size() != 4 || tok[2] != "qf")
                throw DataError("expected 'form <id> qf <c0,c1,...>'", lineno);
            for (const EigenformRecord& r : out.records)
                if (r.field == *field && r.level_exponent == level && r.form_id == tok[1])
                    throw DataError("duplicate form '" + tok[1] + "' at d=" +
                                        std::to_string(field->d()) + " level lambda^" +
                                        std::to_string(level),
                                    lineno);
            Polynomial qf;
            try {
                qf = Polynomial::parse_coefficients(tok[3]);
            } catch (const DataError& e) {
                throw DataError(e.what(), lineno);
            }
            if (qf.degree() < 1)
                throw DataError("qf polynomial must have degree >= 1", lineno);
            if (auto irr = is_irreducible_small(qf)) {
                if (!*irr)
                    throw DataError("qf polynomial " + qf.str() + " is reducible over Q", lineno);
            } else {
                out.warnings.push_back("line " + std::to_string(lineno) + ": irreducibility of " +
                                       qf.str() + " (degree " + std::to_string(qf.degree()) +
                                       ") not checked");
            }
            current = OpenForm{EigenformRecord{*field, level, tok[1], qf, {}}, complex_roots(qf)};
        } else if (tok[0] == "ap") {
            if (!current)
                throw DataError("'ap' row outside a form", lineno);
            if (tok.size() != 4 || tok[2] != "=")
                throw DataError("expected 'ap <x>,<y> = <r0,r1,...>'", lineno);
            EigenformRecord& rec = current->record;
            std::optional<PrimeIdeal> q;
            try {
                q = PrimeIdeal::from_generator(RingElement::parse(rec.field, tok[1]));
            } catch (const DomainError& e) {
                throw DataError(e.what(), lineno);
            } catch (const DataError& e) {
                throw DataError(e.what(), lineno);
            }
            if (rec.eigenvalue(*q))
                throw DataError("second eigenvalue for q = " + q->str() + " in form " + rec.form_id,
                                lineno);
            std::vector<Rational> coords = parse_rationals(tok[3], lineno);
            if (static_cast<int>(coords.size()) > rec.qf_poly.degree())
                throw DataError("eigenvalue has more coordinates than deg(qf) = " +
                                    std::to_string(rec.qf_poly.degree()),
                                lineno);
            QfElement value(rec.qf_poly, std::move(coords));
            const long double hasse = 2 * std::sqrt(static_cast<long double>(q->norm()));
            for (const auto& root : current->roots) {
                if (std::abs(value.embed(root)) > hasse + 1e-6L)
                    throw DataError("eigenvalue " + value.str() + " at q = " + q->str() +
                                        " (norm " + std::to_string(q->norm()) +
                                        ") violates the Hasse bound",
                                    lineno);
            }
            rec.eigenvalues.emplace_back(*q, std::move(value));
        } else {
            throw DataError("unknown directive '" + tok[0] + "'", lineno);
        }
    }
    close_form();
    return out;
}

std::string format_forms(const std::vector<EigenformRecord>& records)
{
    std::ostringstream os;
    std::optional<LevelBlock> block;
    for (const EigenformRecord& r : records) {
        const LevelBlock b{r.field.d(), r.level_exponent};
        if (!block || !(*block == b)) {
            os << "field d=" << b.d << " level lambda^" << b.level_exponent << '\n';
            block = b;
        }
        os << "form " << r.form_id << " qf " << r.qf_poly.coeff_str() << '\n';
        for (const auto& [q, v] : r.eigenvalues)
            os << "ap " << q.generator().str() << " = " << v.str() << '\n';
    }
    return os.str();
}

std::vector<LevelExpectation> parse_expectations(std::istream& in)
{
    std::vector<LevelExpectation> out;
    std::string raw;
    for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
        const std::vector<std::string> tok = tokens(strip_comment(raw));
        if (tok.empty())
            continue;
        if (tok.size() < 5 || tok[0] != "expect" || tok[3] != "forms:")
            throw DataError("expected 'expect d=<d> level=<e> forms: ...'", lineno);
        LevelExpectation e{parse_prefixed(tok[1], "d=", lineno),
                           static_cast<int>(parse_prefixed(tok[2], "level=", lineno)),
                           {}};
        if (tok.size() == 5 && tok[4] == "none") {
            out.push_back(std::move(e));
            continue;
        }
        for (std::size_t i = 4; i < tok.size(); ++i) {
            const std::string& s = tok[i];
            if (s == "cm")
                e.forms.push_back({FormExpectation::Kind::CM, {}});
            else if (s == "one")
                e.forms.push_back({FormExpectation::Kind::One, {}});
            else if (s == "pow2")
                e.forms.push_back({FormExpectation::Kind::PowerOfTwo, {}});
            else if (s.rfind("div(", 0) == 0 && s.back() == ')') {
                FormExpectation f{FormExpectation::Kind::DivisibleBy, {}};
                for (const Rational& r : parse_rationals(s.substr(4, s.size() - 5), lineno)) {
                    if (r.get_den() != 1 || !is_prime(r.get_num()))
                        throw DataError("div() takes primes, got " + r.get_str(), lineno);
                    f.primes.push_back(r.get_num());
                }
                e.forms.push_back(std::move(f));
            } else {
                throw DataError("unknown form signature '" + s + "'", lineno);
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace fermat
