#include <doctest.h>

#include <functional>

#include "mspace/construct.hpp"
#include "mspace/io.hpp"
#include "mspace/rng.hpp"

using namespace mspace;

namespace {
const FieldDesc f3 = FieldDesc::prime(3);
const FieldDesc f5 = FieldDesc::prime(5);

errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return errc::bad_argument;
}
} // namespace

TEST_CASE("parsing the documented examples") {
    ParsedSpace line = parse_mspace("field 3\nn 2\nspace 1\n0 1\n2 0\n");
    REQUIRE(std::holds_alternative<MatrixSubspace>(line));
    CHECK(std::get<MatrixSubspace>(line) ==
          MatrixSubspace::span(f3, 2, {Matrix::from_ints(f3, {{0, 1}, {2, 0}})}));

    ParsedSpace affine = parse_mspace("field 3\nn 2\noffset\n1 0\n0 1\nspace 1\n0 1\n0 0\n");
    REQUIRE(std::holds_alternative<AffineSpace>(affine));
    const AffineSpace& a = std::get<AffineSpace>(affine);
    CHECK(a.offset() == Matrix::identity(f3, 2));
    CHECK(a.translation() == nt_space(2, f3));

    CHECK(code_of([] { parse_mspace("field 4\nn 2\nspace 0\n"); }) == errc::parse_error);
}

TEST_CASE("entries canonicalize on parse") {
    // out-of-range and negative entries reduce mod p
    ParsedSpace s = parse_mspace("field 3\nn 2\nspace 1\n5 -1\n0 9\n");
    CHECK(std::get<MatrixSubspace>(s) ==
          MatrixSubspace::span(f3, 2, {Matrix::from_ints(f3, {{2, 2}, {0, 0}})}));

    // fractions over F_p divide; a denominator divisible by p is out of the
    // field (the offset is not rescaled, so it shows the parsed value)
    ParsedSpace t = parse_mspace("field 3\nn 1\noffset\n1/2\nspace 0\n");
    CHECK(std::get<AffineSpace>(t).offset().at(0, 0).rep() == 2);
    CHECK(code_of([] { parse_mspace("field 3\nn 1\nspace 1\n1/3\n"); }) ==
          errc::value_out_of_field);

    // rational entries reduce to lowest terms
    ParsedSpace r = parse_mspace("field rational\nn 1\nspace 1\n2/4\n");
    CHECK(std::get<MatrixSubspace>(r).basis()[0].at(0, 0).is_one()); // canonical basis rescales
}

TEST_CASE("comments and blank lines are ignored anywhere") {
    std::string text =
        "# header\n"
        "field 3\n"
        "\n"
        "n 2   # ambient size\n"
        "space 2\n"
        "0 1\n"
        "0 0\n"
        "\n"
        "# second matrix\n"
        "0 0\n"
        "0 1\n";
    ParsedSpace s = parse_mspace(text);
    CHECK(std::get<MatrixSubspace>(s).dim() == 2);
}

TEST_CASE("parse errors carry line numbers") {
    auto message_of = [](const std::string& text) {
        try {
            parse_mspace(text);
        } catch (const Error& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message_of("").find("line 1") != std::string::npos);
    CHECK(message_of("field 3\nnn 2\n").find("line 2") != std::string::npos);
    CHECK(message_of("field 3\nn 2\nspace 1\n0 1 1\n0 0\n").find("line 4") != std::string::npos);
    CHECK(message_of("field 3\nn 2\nspace 1\n0 x\n0 0\n").find("line 4") != std::string::npos);
    CHECK(message_of("field 3\nn 2\nspace 0\nleftover\n").find("line 4") != std::string::npos);
}

TEST_CASE("serialize and parse round-trip canonically") {
    std::vector<ParsedSpace> corpus;
    corpus.emplace_back(alt_space(3, f3));
    corpus.emplace_back(nt_space(2, f5));
    corpus.emplace_back(p_alt(Matrix::from_ints(f3, {{1, 0}, {0, 2}})));
    corpus.emplace_back(companion_line(Scalar(f3, 1), Scalar(f3, 1)));
    corpus.emplace_back(MatrixSubspace(f3, 2)); // zero space
    VeeSpec ones{{{1, Matrix::identity(f3, 1)}, {1, Matrix::identity(f3, 1)}}};
    corpus.emplace_back(affine_model(ones, f3));

    FieldDesc fq = FieldDesc::rational();
    Matrix rat(fq, 2, 2);
    rat.at(0, 0) = Scalar(fq, 1);
    rat.at(0, 1) = Scalar::fraction(fq, 1, 2);
    rat.at(1, 1) = Scalar(fq, 3);
    corpus.emplace_back(MatrixSubspace::span(fq, 2, {rat}));

    for (const ParsedSpace& space : corpus) {
        std::string text = serialize(space);
        ParsedSpace back = parse_mspace(text);
        CHECK(back == space);
        // second pass is byte-stable
        CHECK(serialize(back) == text);
    }
}

TEST_CASE("mutated inputs either parse or fail with a reported error") {
    // seeded byte-level mutations of a valid file must never escape the
    // parser's error contract
    std::string base = serialize(alt_space(3, f3));
    SplitMix64 rng(83);
    const std::string alphabet = "0123456789/- \nxoffset#";
    for (int trial = 0; trial < 500; ++trial) {
        std::string text = base;
        int edits = 1 + static_cast<int>(rng.below(4));
        for (int e = 0; e < edits; ++e) {
            std::size_t pos = static_cast<std::size_t>(rng.below(text.size()));
            char c = alphabet[static_cast<std::size_t>(rng.below(alphabet.size()))];
            switch (rng.below(3)) {
                case 0: text[pos] = c; break;
                case 1: text.insert(pos, 1, c); break;
                default: text.erase(pos, 1); break;
            }
        }
        try {
            ParsedSpace s = parse_mspace(text);
            // accepted input must serialize and re-parse to the same value
            CHECK(parse_mspace(serialize(s)) == s);
        } catch (const Error& e) {
            bool expected = e.code() == errc::parse_error || e.code() == errc::value_out_of_field ||
                            e.code() == errc::mixed_fields || e.code() == errc::dimension_mismatch ||
                            e.code() == errc::bad_argument;
            CHECK(expected);
        }
    }
}

TEST_CASE("matrix JSON uses integers over prime fields") {
    nlohmann::ordered_json j = matrix_json(Matrix::from_ints(f3, {{1, 2}, {0, 1}}));
    CHECK(j.dump() == "[[1,2],[0,1]]");
    FieldDesc fq = FieldDesc::rational();
    Matrix m(fq, 1, 1);
    m.at(0, 0) = Scalar::fraction(fq, 1, 2);
    CHECK(matrix_json(m).dump() == "[[\"1/2\"]]");
}
