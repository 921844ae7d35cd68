#pragma once

#include "hecke/exactpoly.hpp"
#include "hecke/partitions.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace testing_support {

inline std::string fixture(const std::string& rel) {
    std::ifstream in(std::string(HECKE_FIXTURE_DIR) + "/" + rel);
    if (!in) throw std::runtime_error("missing fixture " + rel);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string fixture_path(const std::string& rel) { return std::string(HECKE_FIXTURE_DIR) + "/" + rel; }

inline std::mt19937& rng() {
    static std::mt19937 gen(20240611u);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline hecke::LaurentPoly random_laurent(int terms = 4, int span = 5, int coef = 9) {
    hecke::LaurentPoly p;
    for (int k = 0; k < terms; ++k) p.add_term(uniform(-span, span), uniform(-coef, coef));
    return p;
}

inline hecke::Bipartition bp(const char* s) { return hecke::parse_bipartition(s); }

}  // namespace testing_support
