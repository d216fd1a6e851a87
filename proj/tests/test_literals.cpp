#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "biell/biell.hpp"

using namespace biell;

namespace {
const SurfaceType t1{1};
}

TEST_SUITE("literals") {
  TEST_CASE("strict integers") {
    CHECK(parse_int("0") == 0);
    CHECK(parse_int("-12") == -12);
    CHECK(parse_int("123456789012345678901234567890") ==
          Int("123456789012345678901234567890"));
    for (const char* bad : {"", "-0", "007", "+5", " 1", "1 ", "12a", "--3", "-", "0x10", "1.5"})
      CHECK_THROWS_AS(parse_int(bad), std::invalid_argument);
    CHECK(format_int(Int("-123456789012345678901234567890")) ==
          "-123456789012345678901234567890");
    CHECK(format_int(parse_int("-12")) == "-12");
  }

  TEST_CASE("class literals round-trip byte for byte") {
    for (const char* s : {"0,0,1,0", "-1,2,-3,4", "0,0,0,0",
                          "123456789012345678901234567890,-1,0,7"}) {
      CAPTURE(s);
      CHECK(format_class(parse_class(t1, s)) == s);
    }
    CHECK(parse_class(t1, "2,2,1,1") == NumClass(t1, 2, 2, 1, 1));
    for (const char* bad : {"", "1,2,3", "1,2,3,4,5", "1, 2,3,4", "1,2,3,4 ", "1,,3,4", "a,b,c,d"})
      CHECK_THROWS_AS(parse_class(t1, bad), std::invalid_argument);
  }

  TEST_CASE("matrix literals") {
    const char* id16 = "1,0,0,0,0,1,0,0,0,0,1,0,0,0,0,1";
    CHECK(parse_matrix16(id16) == Mat4::identity());
    CHECK(format_matrix16(parse_matrix16(id16)) == id16);
    CHECK_THROWS_AS(parse_matrix16("1,0,0,0,0,1,0,0,0,0,1,0,0,0,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix16(std::string(id16) + ",0"), std::invalid_argument);
  }

  TEST_CASE("word literals") {
    CHECK(parse_word(t1, "") == GeneratorWord(t1));
    CHECK(parse_word(t1, "   \t ") == GeneratorWord(t1));
    const char* canon = "shift tlb(1,-2) fma(0,1,-1,0)^-1 fmb(1,1,0,1)";
    CHECK(format_word(parse_word(t1, canon)) == canon);
    // Surplus whitespace parses, and formatting normalizes it away.
    CHECK(format_word(parse_word(t1, "shift   shift")) == "shift shift");
    CHECK(format_word(parse_word(t1, " shift\nshift ")) == "shift shift");
    CHECK(parse_word(t1, "shift^-1").letters().front().is_inverted());
    CHECK(format_word(parse_word(t1, "shift^-1")) == "shift^-1");

    for (const char* bad : {"tlb(1)", "foo", "shift^2", "tlb(1,2", "fma(1,1,0)",
                            "fma( 1,1,0,1)", "tlb(1,2)x", "shift,shift"})
      CHECK_THROWS_AS(parse_word(t1, bad), std::invalid_argument);

    // Side conditions surface as failed preconditions, not parse errors.
    CHECK_THROWS_AS(parse_word(t1, "fma(2,0,0,1)"), precondition_error);
    CHECK_THROWS_AS(parse_word(t1, "fmb(1,1,1,2)"), precondition_error);
    // The same token is fine where the divisibility holds (fma on type 1).
    CHECK_NOTHROW(parse_word(t1, "fma(1,1,1,2)"));
  }

  TEST_CASE("parsed words act") {
    const GeneratorWord w = parse_word(t1, "fma(1,1,0,1) fmb(1,1,0,1)");
    CHECK(compose(w).apply(NumClass::p4(t1)) == NumClass(t1, 2, 2, 1, 1));
  }

  TEST_CASE("fiber-class display") {
    CHECK(format_class_ab(NumClass(t1, 0, 1, 0, 0)) == "(0, (1/2)A, 0)");
    CHECK(format_class_ab(NumClass(t1, 2, 2, 1, 1)) == "(2, A + B, 1)");
    CHECK(format_class_ab(NumClass(t1, 0, -2, 3, 0)) == "(0, -A + 3B, 0)");
    CHECK(format_class_ab(NumClass(t1, 0, 2, -3, 0)) == "(0, A - 3B, 0)");
    CHECK(format_class_ab(NumClass(t1, 0, 0, 0, 5)) == "(0, 0, 5)");
    CHECK(format_class_ab(NumClass(t1, 0, 0, -1, 0)) == "(0, -B, 0)");
    CHECK(format_class_ab(NumClass(SurfaceType{6}, 0, 2, 1, 0)) == "(0, (1/2)A + (1/2)B, 0)");
    CHECK(format_class_ab(NumClass(SurfaceType{7}, 1, 3, 2, 0)) == "(1, (1/2)A + 2B, 0)");
    CHECK(format_class_ab(NumClass(SurfaceType{7}, 0, 12, 0, 0)) == "(0, 2A, 0)");
  }
}
