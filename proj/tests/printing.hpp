#pragma once

#include "sjet/dsl.hpp"

#include <catch2/catch_amalgamated.hpp>

template <>
struct Catch::StringMaker<sjet::SuperPolynomial> {
    static std::string convert(const sjet::SuperPolynomial& f) { return sjet::print_canonical(f); }
};
