#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include "test_support.hpp"
TEST_CASE("placeholder") { CHECK(true); }
