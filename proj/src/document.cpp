#include "spectral_tetris/document.hpp"

#include "spectral_tetris/errors.hpp"
#include "spectral_tetris/verify.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <regex>
#include <sstream>

namespace stetris {

using nlohmann::json;

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Decimal text as an exact rational, or nullopt when the exponent is too large
// to bother with (the double is then kept).
std::optional<Rational> decimal_value(const std::smatch& m) {
    std::string digits = m[2].str() + m[3].str();
    long long exponent = -static_cast<long long>(m[3].length());
    if (m[4].matched) exponent += std::stoll(m[4].str());
    if (exponent > 400 || exponent < -400) return std::nullopt;
    // cpp_int reads a leading zero as an octal prefix.
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
    BigInt mantissa{digits.empty() ? std::string("0") : digits};
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::llabs(exponent)));
    Rational q = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
    return m[1].str() == "-" ? Rational(-q) : q;
}

json real_to_json(const Real& x) {
    if (x.is_exact()) return x.to_string();
    return x.to_double();
}

Real real_from_json(const json& j, const char* what) {
    if (j.is_string()) {
        const auto q = parse_rational(j.get<std::string>());
        if (!q) throw ValidationError(std::string(what) + ": malformed rational \"" + j.get<std::string>() + "\"");
        return *q;
    }
    if (j.is_number()) return Real::inexact(j.get<double>());
    throw ValidationError(std::string(what) + ": expected a rational string or a number");
}

ConstructionMethod method_from_string(const std::string& s) {
    for (auto m : {ConstructionMethod::unspecified, ConstructionMethod::stc, ConstructionMethod::tdftst, ConstructionMethod::dftst})
        if (s == to_string(m)) return m;
    throw ValidationError("unknown constructor \"" + s + "\"");
}

BlockKind kind_from_string(const std::string& s) {
    for (auto k : {BlockKind::unit, BlockKind::pair, BlockKind::tight, BlockKind::general, BlockKind::terminal})
        if (s == to_string(k)) return k;
    throw ValidationError("unknown block kind \"" + s + "\"");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

Real parse_real(std::string_view token) {
    const std::string_view t = trim(token);
    if (t.find('/') != std::string_view::npos || t.find_first_not_of("+-0123456789") == std::string_view::npos) {
        if (auto q = parse_rational(t)) return *q;
        throw ValidationError("malformed number \"" + std::string(t) + "\"");
    }
    static const std::regex decimal(R"(([+-]?)(\d*)\.?(\d*)(?:[eE]([+-]?\d+))?)");
    const std::string text(t);
    std::smatch m;
    if (!std::regex_match(text, m, decimal) || (m[2].length() == 0 && m[3].length() == 0))
        throw ValidationError("malformed number \"" + text + "\"");
    const double d = std::strtod(text.c_str(), nullptr);
    if (!std::isfinite(d)) throw ValidationError("number \"" + text + "\" is out of range");
    if (const auto q = decimal_value(m); q && *q == Rational(d)) return *q;
    return Real::inexact(d);
}

Spectrum parse_spectrum(std::string_view text) {
    std::vector<Real> values;
    for (std::string_view tok : split(text, ',')) values.push_back(parse_real(tok));
    return Spectrum(std::move(values));
}

std::vector<int> parse_dims(std::string_view text) {
    std::vector<int> dims;
    for (std::string_view tok : split(text, ',')) {
        tok = trim(tok);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
            throw ValidationError("malformed dimension \"" + std::string(tok) + "\"");
        if (v < 1) throw ValidationError("dimensions must be positive, got " + std::to_string(v));
        dims.push_back(v);
    }
    return dims;
}

std::string write_document(const FrameDocument& doc) {
    const SynthesisMatrix& f = doc.frame;
    json j;
    j["format"] = kFrameFormat;
    j["n"] = f.rows();
    j["m"] = f.cols();

    json eig = json::array();
    for (const Real& v : doc.eigenvalues.values()) eig.push_back(real_to_json(v));
    j["eigenvalues"] = std::move(eig);

    json entries = json::array();
    json exact = json::array();
    for (const auto& [key, e] : f.entries()) {
        const auto [col, row] = key;
        const std::complex<double> v = entry_value(e);
        entries.push_back({row, col, v.real(), v.imag()});
        exact.push_back({row, col, real_to_json(e.radicand), e.root_order, e.root_power});
    }
    j["entries"] = std::move(entries);
    j["exactEntries"] = std::move(exact);
    if (doc.partition) j["partition"] = doc.partition->groups;

    json meta;
    meta["constructor"] = to_string(f.method());
    const SparsityReport sp = sparsity(f);
    meta["sparsity"] = sp.structural_nonzeros;
    if (sp.formula_value) meta["sparsityFormula"] = *sp.formula_value;
    json log = json::array();
    for (const BlockRecord& b : f.block_log())
        log.push_back({{"kind", to_string(b.kind)},
                       {"size", b.size},
                       {"firstCorrection", real_to_json(b.first_correction)},
                       {"lastCorrection", real_to_json(b.last_correction)},
                       {"row", b.row_offset},
                       {"col", b.col_offset}});
    meta["blockLog"] = std::move(log);
    meta["warnings"] = f.warnings();
    meta["floatEigenvalues"] = !doc.eigenvalues.is_exact();
    j["metadata"] = std::move(meta);
    return j.dump(2) + "\n";
}

FrameDocument read_document(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("document is not valid JSON: ") + e.what());
    }
    try {
        if (j.value("format", std::string()) != kFrameFormat)
            throw ValidationError(std::string("document format must be \"") + kFrameFormat + "\"");
        SynthesisMatrix f(j.at("n").get<int>(), j.at("m").get<int>());

        std::vector<Real> eig;
        for (const json& v : j.at("eigenvalues")) eig.push_back(real_from_json(v, "eigenvalue"));
        Spectrum lam(std::move(eig));

        if (j.contains("exactEntries")) {
            for (const json& e : j.at("exactEntries")) {
                if (!e.is_array() || e.size() != 5) throw ValidationError("exactEntries rows need 5 fields");
                f.set(e[0].get<int>(), e[1].get<int>(),
                      Entry::make(real_from_json(e[2], "radicand"), e[3].get<long long>(), e[4].get<long long>()));
            }
        } else {
            for (const json& e : j.at("entries")) {
                if (!e.is_array() || e.size() != 4) throw ValidationError("entries rows need 4 fields");
                const double re = e[2].get<double>();
                const double im = e[3].get<double>();
                if (im != 0.0) throw ValidationError("complex entries need the exactEntries form");
                f.set(e[0].get<int>(), e[1].get<int>(), Entry::make(Real::inexact(re * re), re < 0 ? 2 : 1, re < 0 ? 1 : 0));
            }
        }

        std::optional<FusionPartition> partition;
        if (j.contains("partition")) partition = FusionPartition{j.at("partition").get<std::vector<std::vector<int>>>()};

        if (j.contains("metadata")) {
            const json& meta = j.at("metadata");
            if (meta.contains("constructor")) f.set_method(method_from_string(meta.at("constructor").get<std::string>()));
            if (meta.contains("blockLog"))
                for (const json& b : meta.at("blockLog"))
                    f.append_block({kind_from_string(b.at("kind").get<std::string>()), b.at("size").get<int>(),
                                    real_from_json(b.at("firstCorrection"), "firstCorrection"),
                                    real_from_json(b.at("lastCorrection"), "lastCorrection"), b.at("row").get<int>(),
                                    b.at("col").get<int>()});
            if (meta.contains("warnings"))
                for (const json& w : meta.at("warnings")) f.add_warning(w.get<std::string>());
        }
        return {std::move(f), std::move(lam), std::move(partition)};
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed document: ") + e.what());
    }
}

std::string write_matrix_market(const SynthesisMatrix& f) {
    std::ostringstream os;
    os << "%%MatrixMarket matrix coordinate complex general\n";
    os << f.rows() << ' ' << f.cols() << ' ' << f.nonzeros() << '\n';
    for (const auto& [key, e] : f.entries()) {
        const std::complex<double> v = entry_value(e);
        os << key.second + 1 << ' ' << key.first + 1 << ' ' << format_double(v.real()) << ' ' << format_double(v.imag()) << '\n';
    }
    return os.str();
}

std::string write_csv(const SynthesisMatrix& f) {
    std::string out;
    char buf[80];
    for (int r = 0; r < f.rows(); ++r) {
        for (int c = 0; c < f.cols(); ++c) {
            const Entry* e = f.find(r, c);
            const std::complex<double> v = e ? entry_value(*e) : std::complex<double>();
            std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
            if (c) out += ',';
            out += buf;
        }
        out += '\n';
    }
    return out;
}

std::vector<std::vector<std::complex<double>>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::complex<double>>> grid;
    for (std::string_view line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (trim(line).empty()) continue;
        auto& row = grid.emplace_back();
        for (std::string_view cell : split(line, ',')) {
            const std::string s(trim(cell));
            const char* p = s.c_str();
            char* end = nullptr;
            const double re = std::strtod(p, &end);
            const char* mid = end;
            const double im = std::strtod(mid, &end);
            if (end == mid || mid == p || *end != 'i' || end + 1 != p + s.size())
                throw ValidationError("malformed CSV cell \"" + s + "\"");
            row.emplace_back(re, im);
        }
        if (row.size() != grid.front().size()) throw ValidationError("CSV rows have different lengths");
    }
    return grid;
}

}  // namespace stetris
