#include <charconv>
#include <string>

#include "triwalk/cli.hpp"

namespace triwalk::cli {

namespace {

// Decimal literal with optional sign, no surrounding space.
std::optional<double> parse_real(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t start = 0;
    if (s.front() == '+') start = 1;  // from_chars rejects a leading '+'
    if (start == s.size()) return std::nullopt;
    double v = 0.0;
    const char* first = s.data() + start;
    const char* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, v, std::chars_format::general);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return v;
}

// Coefficient of an imaginary term, text without the trailing 'i'.
std::optional<double> parse_imag_coefficient(std::string_view s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
}

std::string normalize_minus(std::string_view text) {
    // Accept the Unicode minus sign (U+2212) as '-'.
    std::string s;
    s.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            s.push_back('-');
            i += 2;
        } else if (text[i] != ' ') {
            s.push_back(text[i]);
        }
    }
    return s;
}

}  // namespace

std::optional<Complex> parse_complex(std::string_view text) {
    const std::string s = normalize_minus(text);
    if (s.empty()) return std::nullopt;
    if (s.back() != 'i') {
        const auto re = parse_real(s);
        if (!re) return std::nullopt;
        return Complex(*re, 0.0);
    }
    const std::string_view body(s.data(), s.size() - 1);
    // Split at the last sign that is not the leading one and not part of an
    // exponent ("1e-3").
    for (std::size_t pos = body.size(); pos-- > 1;) {
        const char ch = body[pos];
        if ((ch == '+' || ch == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
            const auto re = parse_real(body.substr(0, pos));
            const auto im = parse_imag_coefficient(body.substr(pos));
            if (!re || !im) return std::nullopt;
            return Complex(*re, *im);
        }
    }
    const auto im = parse_imag_coefficient(body);
    if (!im) return std::nullopt;
    return Complex(0.0, *im);
}

std::optional<std::array<Complex, 3>> parse_qubit_amplitudes(std::string_view text) {
    std::array<Complex, 3> out{};
    std::size_t begin = 0;
    for (std::size_t idx = 0; idx < 3; ++idx) {
        const std::size_t comma = text.find(',', begin);
        const bool last = idx == 2;
        if (last != (comma == std::string_view::npos)) return std::nullopt;
        const std::size_t end = last ? text.size() : comma;
        const auto z = parse_complex(text.substr(begin, end - begin));
        if (!z) return std::nullopt;
        out[idx] = *z;
        begin = end + 1;
    }
    return out;
}

}  // namespace triwalk::cli
