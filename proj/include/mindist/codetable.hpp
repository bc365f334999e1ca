#pragma once

// Code-table ingestion, approximation error statistics and a brute-force
// minimum distance oracle for small linear codes.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mindist {

/// Malformed input; carries the 1-based line number it was found on.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed record that violates 1 <= d_lower <= d_upper <= n, k <= n.
class ValidationError : public ParseError {
public:
    using ParseError::ParseError;
};

struct CodeTableEntry {
    int n = 0;
    int k = 0;
    int d_lower = 0;  ///< best known achievable d
    int d_upper = 0;  ///< best known upper bound on d

    [[nodiscard]] bool is_exact() const noexcept { return d_lower == d_upper; }

    /// Throws std::invalid_argument when the entry invariants do not hold.
    void check() const;

    friend bool operator==(const CodeTableEntry&, const CodeTableEntry&) = default;
};

/// Parses `n,k,d_lower,d_upper` (or `n,k,d`) records. Blank lines and lines
/// starting with '#' are skipped.
std::vector<CodeTableEntry> parse_table(std::istream& input);
std::vector<CodeTableEntry> parse_table_file(const std::string& path);

/// dmin(n, k) - d_lower, or nullopt when exact_required and the entry only
/// brackets d.
std::optional<double> approximation_error(const CodeTableEntry& entry, bool exact_required);

struct EntryError {
    int n;
    int k;
    double e;
};

/// Inexact entry: the model estimate against the bracket it should fall in.
struct BracketCheck {
    int n;
    int k;
    double d_model;
    double below_upper;  ///< d_upper - d_model
    double above_lower;  ///< d_model - d_lower
};

struct ValidationReport {
    std::size_t entries_evaluated = 0;
    std::vector<EntryError> errors;          ///< input order
    std::map<long long, std::size_t> histogram;  ///< floor(e) -> count
    double frac_within_1 = 0.0;
    double frac_within_2 = 0.0;
    std::vector<BracketCheck> skipped;
};

/// Scores every entry (exact ones only unless exact_only is false). Throws
/// std::invalid_argument when nothing is left to evaluate.
ValidationReport validate(std::span<const CodeTableEntry> entries, bool exact_only = true);

/// Writes `entries=`, `frac_within_1=`, `frac_within_2=`, `skipped=`, then a
/// `bin,count` CSV block.
void write_report(const ValidationReport& report, std::ostream& out);

/// k x n binary generator matrix with rank k over GF(2).
class GeneratorMatrix {
public:
    /// Rows as strings of '0'/'1'. Throws std::invalid_argument on ragged,
    /// non-binary or rank-deficient input.
    GeneratorMatrix(int n, const std::vector<std::string>& rows);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int k() const noexcept { return static_cast<int>(rows_.size()); }
    [[nodiscard]] bool bit(int row, int column) const;

    /// Packed row words, ceil(n/64) per row, bit j of the row at word j/64.
    [[nodiscard]] std::span<const std::uint64_t> row(int index) const;

private:
    int n_;
    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

/// Header line `n k` followed by k rows of n '0'/'1' characters.
GeneratorMatrix parse_generator(std::istream& input);
GeneratorMatrix parse_generator_file(const std::string& path);

inline constexpr int kMaxEnumerationRows = 24;

/// Minimum nonzero codeword weight by Gray-code enumeration of all 2^k - 1
/// nonzero messages. Throws std::length_error for k > 24.
int brute_force_min_distance(const GeneratorMatrix& g);

}  // namespace mindist
