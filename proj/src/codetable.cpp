#include "mindist/codetable.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "mindist/approx.hpp"

namespace mindist {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view field, int& out) {
    field = trim(field);
    if (field.empty()) {
        return false;
    }
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

std::string describe(const CodeTableEntry& e) {
    return "(" + std::to_string(e.n) + "," + std::to_string(e.k) + "," + std::to_string(e.d_lower) + "," +
           std::to_string(e.d_upper) + ")";
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return in;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

void CodeTableEntry::check() const {
    if (n < 1 || k < 1 || k > n) {
        throw std::invalid_argument("entry " + describe(*this) + " needs 1 <= k <= n");
    }
    if (d_lower < 1 || d_lower > d_upper || d_upper > n) {
        throw std::invalid_argument("entry " + describe(*this) + " needs 1 <= d_lower <= d_upper <= n");
    }
}

std::vector<CodeTableEntry> parse_table(std::istream& input) {
    std::vector<CodeTableEntry> entries;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(input, line)) {
        ++line_number;
        const std::string_view text = trim(line);
        if (text.empty() || text.front() == '#') {
            continue;
        }
        std::vector<int> fields;
        std::size_t start = 0;
        while (true) {
            const auto comma = text.find(',', start);
            int value = 0;
            const auto field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
            if (!parse_int(field, value)) {
                throw ParseError(line_number, "expected an integer field, got '" + std::string(trim(field)) + "'");
            }
            fields.push_back(value);
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        if (fields.size() != 3 && fields.size() != 4) {
            throw ParseError(line_number, "expected n,k,d or n,k,d_lower,d_upper; got " +
                                              std::to_string(fields.size()) + " fields");
        }
        CodeTableEntry entry{fields[0], fields[1], fields[2], fields.size() == 4 ? fields[3] : fields[2]};
        try {
            entry.check();
        } catch (const std::invalid_argument& e) {
            throw ValidationError(line_number, e.what());
        }
        entries.push_back(entry);
    }
    return entries;
}

std::vector<CodeTableEntry> parse_table_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_table(in);
}

std::optional<double> approximation_error(const CodeTableEntry& entry, bool exact_required) {
    if (exact_required && !entry.is_exact()) {
        return std::nullopt;
    }
    return dmin(entry.n, entry.k) - entry.d_lower;
}

ValidationReport validate(std::span<const CodeTableEntry> entries, bool exact_only) {
    ValidationReport report;
    std::size_t within_1 = 0;
    std::size_t within_2 = 0;
    for (const auto& entry : entries) {
        entry.check();
        const auto e = approximation_error(entry, exact_only);
        if (!e) {
            const double d_model = dmin(entry.n, entry.k);
            report.skipped.push_back({entry.n, entry.k, d_model, entry.d_upper - d_model, d_model - entry.d_lower});
            continue;
        }
        report.errors.push_back({entry.n, entry.k, *e});
        ++report.histogram[static_cast<long long>(std::floor(*e))];
        within_1 += std::abs(*e) < 1.0;
        within_2 += std::abs(*e) < 2.0;
    }
    report.entries_evaluated = report.errors.size();
    if (report.entries_evaluated == 0) {
        throw std::invalid_argument("no exact code-table entries to evaluate");
    }
    const auto total = static_cast<double>(report.entries_evaluated);
    report.frac_within_1 = static_cast<double>(within_1) / total;
    report.frac_within_2 = static_cast<double>(within_2) / total;
    return report;
}

void write_report(const ValidationReport& report, std::ostream& out) {
    char buffer[64];
    out << "entries=" << report.entries_evaluated << '\n';
    std::snprintf(buffer, sizeof buffer, "%.3f", report.frac_within_1);
    out << "frac_within_1=" << buffer << '\n';
    std::snprintf(buffer, sizeof buffer, "%.3f", report.frac_within_2);
    out << "frac_within_2=" << buffer << '\n';
    out << "skipped=" << report.skipped.size() << '\n';
    out << "bin,count\n";
    for (const auto& [bin, count] : report.histogram) {
        out << bin << ',' << count << '\n';
    }
}

GeneratorMatrix::GeneratorMatrix(int n, const std::vector<std::string>& rows)
    : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64) {
    if (n < 1) {
        throw std::invalid_argument("generator matrix needs n >= 1");
    }
    if (rows.empty() || rows.size() > static_cast<std::size_t>(n)) {
        throw std::invalid_argument("generator matrix needs 1 <= k <= n rows");
    }
    rows_.reserve(rows.size());
    for (const auto& text : rows) {
        if (text.size() != static_cast<std::size_t>(n)) {
            throw std::invalid_argument("generator row has " + std::to_string(text.size()) + " columns, expected " +
                                        std::to_string(n));
        }
        std::vector<std::uint64_t> packed(words_, 0);
        for (std::size_t j = 0; j < text.size(); ++j) {
            if (text[j] == '1') {
                packed[j / 64] |= std::uint64_t{1} << (j % 64);
            } else if (text[j] != '0') {
                throw std::invalid_argument("generator rows may only contain '0' and '1'");
            }
        }
        rows_.push_back(std::move(packed));
    }

    // Rank over GF(2) by elimination on a copy.
    auto work = rows_;
    std::size_t rank = 0;
    for (int col = 0; col < n_ && rank < work.size(); ++col) {
        const auto word = static_cast<std::size_t>(col) / 64;
        const auto mask = std::uint64_t{1} << (col % 64);
        auto pivot = std::find_if(work.begin() + static_cast<std::ptrdiff_t>(rank), work.end(),
                                  [&](const auto& r) { return (r[word] & mask) != 0; });
        if (pivot == work.end()) {
            continue;
        }
        std::swap(*pivot, work[rank]);
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i != rank && (work[i][word] & mask)) {
                for (std::size_t w = 0; w < words_; ++w) {
                    work[i][w] ^= work[rank][w];
                }
            }
        }
        ++rank;
    }
    if (rank != rows_.size()) {
        throw std::invalid_argument("generator matrix rows are linearly dependent (rank " + std::to_string(rank) +
                                    " < " + std::to_string(rows_.size()) + ")");
    }
}

bool GeneratorMatrix::bit(int row, int column) const {
    const auto& r = rows_.at(static_cast<std::size_t>(row));
    if (column < 0 || column >= n_) {
        throw std::out_of_range("column out of range");
    }
    return (r[static_cast<std::size_t>(column) / 64] >> (column % 64)) & 1U;
}

std::span<const std::uint64_t> GeneratorMatrix::row(int index) const {
    return rows_.at(static_cast<std::size_t>(index));
}

GeneratorMatrix parse_generator(std::istream& input) {
    std::string line;
    std::size_t line_number = 0;
    int n = 0;
    int k = 0;
    bool have_header = false;
    std::vector<std::string> rows;
    while (std::getline(input, line)) {
        ++line_number;
        const std::string_view text = trim(line);
        if (text.empty() || text.front() == '#') {
            continue;
        }
        if (!have_header) {
            const auto space = text.find_first_of(" \t");
            if (space == std::string_view::npos || !parse_int(text.substr(0, space), n) ||
                !parse_int(text.substr(space + 1), k)) {
                throw ParseError(line_number, "expected header 'n k'");
            }
            if (n < 1 || k < 1 || k > n) {
                throw ValidationError(line_number, "header needs 1 <= k <= n");
            }
            have_header = true;
            continue;
        }
        if (text.size() != static_cast<std::size_t>(n) ||
            text.find_first_not_of("01") != std::string_view::npos) {
            throw ParseError(line_number, "expected a row of " + std::to_string(n) + " '0'/'1' characters");
        }
        rows.emplace_back(text);
    }
    if (!have_header) {
        throw ParseError(line_number, "missing header 'n k'");
    }
    if (rows.size() != static_cast<std::size_t>(k)) {
        throw ParseError(line_number, "expected " + std::to_string(k) + " rows, got " + std::to_string(rows.size()));
    }
    return GeneratorMatrix(n, rows);
}

GeneratorMatrix parse_generator_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_generator(in);
}

int brute_force_min_distance(const GeneratorMatrix& g) {
    const int k = g.k();
    if (k > kMaxEnumerationRows) {
        throw std::length_error("enumerating 2^" + std::to_string(k) + " codewords exceeds the 2^" +
                                std::to_string(kMaxEnumerationRows) + " budget");
    }
    const auto words = g.row(0).size();
    std::vector<std::uint64_t> codeword(words, 0);
    int best = g.n();
    // Gray code order: step i flips the row at the lowest set bit of i.
    const std::uint64_t count = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < count; ++i) {
        const auto r = g.row(std::countr_zero(i));
        int weight = 0;
        for (std::size_t w = 0; w < words; ++w) {
            codeword[w] ^= r[w];
            weight += std::popcount(codeword[w]);
        }
        best = std::min(best, weight);
    }
    return best;
}

}  // namespace mindist
