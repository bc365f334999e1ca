#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "mindist/approx.hpp"
#include "mindist/codetable.hpp"

using namespace mindist;

namespace {

std::vector<CodeTableEntry> parse(const std::string& text) {
    std::istringstream in(text);
    return parse_table(in);
}

GeneratorMatrix generator(const std::string& text) {
    std::istringstream in(text);
    return parse_generator(in);
}

const std::string kHamming74 = "7 4\n1101000\n0110100\n0011010\n0001101\n";
const std::string kExtendedHamming84 = "8 4\n11010001\n01101001\n00110101\n00011011\n";

std::string fixture(const std::string& name) { return std::string(MINDIST_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("parse_table") {
    const auto hamming = parse("7,4,3,3\n");
    REQUIRE(hamming.size() == 1);
    CHECK(hamming[0] == CodeTableEntry{7, 4, 3, 3});
    CHECK(hamming[0].is_exact());

    CHECK(parse("# comment\n\n").empty());

    const auto bracket = parse("256,64,65,90\n");
    REQUIRE(bracket.size() == 1);
    CHECK(bracket[0] == CodeTableEntry{256, 64, 65, 90});
    CHECK_FALSE(bracket[0].is_exact());

    const auto mixed = parse("# header\n7,1,7\n  23, 12, 7 \r\n\n24,12,8,8\n");
    REQUIRE(mixed.size() == 3);
    CHECK(mixed[0] == CodeTableEntry{7, 1, 7, 7});
    CHECK(mixed[1] == CodeTableEntry{23, 12, 7, 7});
    CHECK(mixed[2] == CodeTableEntry{24, 12, 8, 8});
}

TEST_CASE("parse_table errors carry line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("7,4,3\n7,4\n") == 2);
    CHECK(line_of("# x\n\n7,4,x\n") == 3);
    CHECK(line_of("7,4,3,3,3\n") == 1);
    CHECK(line_of("7,,3\n") == 1);
    CHECK(line_of("7,4,3.5\n") == 1);
    CHECK_THROWS_AS(parse("7,8,1\n"), ValidationError);
    CHECK_THROWS_AS(parse("7,4,4,3\n"), ValidationError);
    CHECK_THROWS_AS(parse("7,4,3,8\n"), ValidationError);
    CHECK_THROWS_AS(parse("7,4,0\n"), ValidationError);
    CHECK(line_of("7,1,7\n7,4,5,3\n") == 2);
}

TEST_CASE("approximation_error") {
    CHECK(*approximation_error({7, 4, 3, 3}, true) == doctest::Approx(2.774705408462532 - 3).epsilon(1e-10));
    for (int n : {1, 7, 15, 31, 100}) {
        CHECK(std::abs(*approximation_error({n, 1, n, n}, true)) <= 1e-9);
    }
    CHECK_FALSE(approximation_error({256, 64, 65, 90}, true).has_value());
    CHECK(*approximation_error({256, 64, 65, 90}, false) == doctest::Approx(74.395760470432464 - 65));
}

TEST_CASE("validate") {
    const std::vector<CodeTableEntry> repetition{{7, 1, 7, 7}, {15, 1, 15, 15}, {31, 1, 31, 31}};
    const auto r = validate(repetition);
    CHECK(r.entries_evaluated == 3);
    CHECK(r.frac_within_1 == 1.0);
    CHECK(r.frac_within_2 == 1.0);
    CHECK(r.histogram.at(0) == 3);

    const std::vector<CodeTableEntry> hamming{{7, 4, 3, 3}};
    const auto h = validate(hamming);
    CHECK(h.histogram == std::map<long long, std::size_t>{{-1, 1}});
    CHECK(h.frac_within_1 == 1.0);

    const std::vector<CodeTableEntry> mixed{{7, 4, 3, 3}, {256, 64, 65, 90}};
    const auto m = validate(mixed);
    CHECK(m.entries_evaluated == 1);
    REQUIRE(m.skipped.size() == 1);
    CHECK(m.skipped[0].d_model == doctest::Approx(74.3957604704));
    CHECK(m.skipped[0].above_lower > 0);
    CHECK(m.skipped[0].below_upper > 0);
    CHECK(validate(mixed, false).entries_evaluated == 2);

    const std::vector<CodeTableEntry> none{{256, 64, 65, 90}};
    CHECK_THROWS_AS(validate(none), std::invalid_argument);
    CHECK_THROWS_AS(validate(std::vector<CodeTableEntry>{}), std::invalid_argument);
}

TEST_CASE("validate is order-insensitive") {
    const auto entries = parse_table_file(fixture("snapshot.csv"));
    const auto base = validate(entries);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        auto shuffled = entries;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const auto r = validate(shuffled);
        CHECK(r.entries_evaluated == base.entries_evaluated);
        CHECK(r.histogram == base.histogram);
        CHECK(r.frac_within_1 == base.frac_within_1);
        CHECK(r.frac_within_2 == base.frac_within_2);
        std::size_t total = 0;
        for (const auto& [bin, count] : r.histogram) total += count;
        CHECK(total == r.entries_evaluated);
    }
}

TEST_CASE("write_report format") {
    const std::vector<CodeTableEntry> entries{{7, 4, 3, 3}, {7, 1, 7, 7}};
    std::ostringstream out;
    write_report(validate(entries), out);
    CHECK(out.str() == "entries=2\nfrac_within_1=1.000\nfrac_within_2=1.000\nskipped=0\nbin,count\n-1,1\n0,1\n");
}

TEST_CASE("generator matrix parsing and checks") {
    const auto g = generator(kHamming74);
    CHECK(g.n() == 7);
    CHECK(g.k() == 4);
    CHECK(g.bit(0, 0));
    CHECK_FALSE(g.bit(0, 2));
    CHECK_THROWS_AS(generator("7 2\n1101000\n1101000\n"), std::invalid_argument);  // rank 1
    CHECK_THROWS_AS(generator("7 2\n1101000\n"), ParseError);
    CHECK_THROWS_AS(generator("7 1\n110100\n"), ParseError);
    CHECK_THROWS_AS(generator("7 1\n1102000\n"), ParseError);
    CHECK_THROWS_AS(generator("1101000\n"), ParseError);
    CHECK_THROWS_AS(GeneratorMatrix(3, {"0000"}), std::invalid_argument);
    CHECK_THROWS_AS(GeneratorMatrix(3, {"000"}), std::invalid_argument);  // zero row
}

TEST_CASE("brute force minimum distance") {
    CHECK(brute_force_min_distance(generator(kHamming74)) == 3);
    CHECK(brute_force_min_distance(generator(kExtendedHamming84)) == 4);
    for (int n : {1, 5, 64, 65, 200}) {
        CHECK(brute_force_min_distance(GeneratorMatrix(n, {std::string(n, '1')})) == n);
    }
    // Spans 64-bit word boundaries.
    const std::string a = std::string(70, '0') + std::string(30, '1');
    const std::string b = std::string(40, '1') + std::string(60, '0');
    CHECK(brute_force_min_distance(GeneratorMatrix(100, {a, b})) == 30);

    std::vector<std::string> identity;
    for (int i = 0; i < 25; ++i) {
        std::string row(25, '0');
        row[i] = '1';
        identity.push_back(row);
    }
    CHECK_THROWS_AS(brute_force_min_distance(GeneratorMatrix(25, identity)), std::length_error);
}

TEST_CASE("brute force matches exhaustive pairwise distance on random codes") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 9);
        const int k = 1 + static_cast<int>(rng() % 5);
        std::vector<std::string> rows(k, std::string(n, '0'));
        for (auto& row : rows)
            for (auto& c : row) c = (rng() & 1) ? '1' : '0';
        std::optional<GeneratorMatrix> g;
        try {
            g.emplace(n, rows);
        } catch (const std::invalid_argument&) {
            continue;
        }
        // pairwise distance over the explicit codebook
        std::vector<std::vector<int>> words;
        for (int m = 0; m < (1 << k); ++m) {
            std::vector<int> w(n, 0);
            for (int i = 0; i < k; ++i)
                if (m >> i & 1)
                    for (int j = 0; j < n; ++j) w[j] ^= rows[i][j] - '0';
            words.push_back(w);
        }
        int best = n;
        for (std::size_t x = 0; x < words.size(); ++x)
            for (std::size_t y = x + 1; y < words.size(); ++y) {
                int dist = 0;
                for (int j = 0; j < n; ++j) dist += words[x][j] != words[y][j];
                best = std::min(best, dist);
            }
        CHECK(brute_force_min_distance(*g) == best);
    }
}

TEST_CASE("every bundled fixture's distance is confirmed by enumeration") {
    const auto entries = parse_table_file(fixture("snapshot.csv"));
    CHECK(entries.size() >= 20);
    for (const auto& e : entries) {
        CAPTURE(e.n);
        CAPTURE(e.k);
        REQUIRE(e.is_exact());
        const auto g = parse_generator_file(fixture("generators/" + std::to_string(e.n) + "_" + std::to_string(e.k) + ".gen"));
        CHECK(g.n() == e.n);
        CHECK(g.k() == e.k);
        CHECK(brute_force_min_distance(g) == e.d_lower);
        CHECK(std::abs(*approximation_error(e, true)) < 2.0);
    }
}
