#include <gtest/gtest.h>

#include "lieder/constructions.hpp"
#include "lieder/io.hpp"
#include "oracles.hpp"

using namespace lieder;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_algebra(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return ~std::size_t{0};
}

TEST(ParseAlgebra, HeisenbergWithComments) {
  const auto L = parse_algebra("# heisenberg\nfield Q\ndim 3\n\nb 1 2 : 3   # [x,y] = z\n");
  EXPECT_EQ(L.dim(), 3u);
  EXPECT_EQ(L.structure(0, 1), fx::ints({0, 0, 1}, Q));
  EXPECT_EQ(L.structure(1, 0), fx::ints({0, 0, -1}, Q));
  EXPECT_TRUE(validate(L).ok());
}

TEST(ParseAlgebra, CoefficientsAndFields) {
  const auto L = parse_algebra("field GF(5)\ndim 2\nb 2 1 : -1*2\n");
  EXPECT_EQ(L.field(), FieldSpec::prime(5));
  EXPECT_EQ(L.structure(0, 1)[1].residue(), 1u);
  const auto M = parse_algebra("field Q\ndim 2\nb 1 2 : 1/2*1 -3*2\n");
  EXPECT_EQ(M.structure(0, 1)[0].to_string(), "1/2");
  EXPECT_EQ(M.structure(0, 1)[1].to_string(), "-3");
}

TEST(ParseAlgebra, ConsistentMirrorAccepted) {
  EXPECT_NO_THROW(parse_algebra("field Q\ndim 2\nb 1 2 : 2\nb 2 1 : -1*2\n"));
}

TEST(ParseAlgebra, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("field Q\ndim 2\nb 1 2 : 2\nb 2 1 : 2\n"), 4u);
  EXPECT_EQ(parse_error_line("field Q\ndim 2\nb 1 1 : 2\n"), 3u);
  EXPECT_EQ(parse_error_line("b 1 2 : 1\nfield Q\ndim 2\n"), 1u);
  EXPECT_EQ(parse_error_line("field Q\ndim 2\nb 1 3 : 1\n"), 3u);
  EXPECT_EQ(parse_error_line("field Q\ndim 2\nbracket 1 2 : 1\n"), 3u);
  EXPECT_EQ(parse_error_line("field Q\nfield Q\n"), 2u);
  EXPECT_EQ(parse_error_line("field GF(4)\ndim 2\n"), 1u);
  EXPECT_EQ(parse_error_line("field GF(5)\ndim 2\nb 1 2 : 1/5*1\n"), 3u);
  EXPECT_EQ(parse_error_line("field Q\ndim 2\nb 1 2 1\n"), 3u);
  EXPECT_EQ(parse_error_line("field Q\n"), 0u);
  EXPECT_EQ(parse_error_line("field Q\ndim 2\nb 1 2 : 1\nb 1 2 : 1\n"), 4u);
}

TEST(FormatAlgebra, RoundTrips) {
  for (const char* name : {"sl2", "heisenberg", "borel:3", "sl2+affine"}) {
    for (const auto f : {Q, FieldSpec::prime(7)}) {
      const auto L = catalog_algebra(name, f);
      const auto text = format_algebra(L);
      const auto M = parse_algebra(text);
      EXPECT_EQ(format_algebra(M), text.substr(text.find('\n') + 1)) << name;
      for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j) EXPECT_EQ(L.structure(i, j), M.structure(i, j));
    }
  }
  const auto J = jacobson(3).algebra;
  EXPECT_EQ(parse_algebra(format_algebra(J)).dim(), 9u);
}

TEST(Derivation, RoundTripsAndRejectsShape) {
  const auto m = fx::ints({{1, -2}, {0, 3}}, Q);
  EXPECT_EQ(parse_derivation(format_derivation(m), Q), m);
  EXPECT_THROW(parse_derivation("dim 2\n1 2\n", Q), ParseError);
  EXPECT_THROW(parse_derivation("dim 2\n1 2 3\n4 5\n", Q), ParseError);
  EXPECT_THROW(parse_derivation("1 2\n", Q), ParseError);
}

TEST(Fnv, KnownVectors) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(ReadFile, MissingFileIsParseError) { EXPECT_THROW(read_file("/nonexistent/algebra.txt"), ParseError); }

}  // namespace
