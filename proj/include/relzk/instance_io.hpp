#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "relzk/games.hpp"
#include "relzk/subset_sum.hpp"
#include "relzk/three_sat.hpp"

namespace relzk::io {

/// Subset-sum instance record. Line-oriented, '#' comments:
///   n 5
///   s 1 4 5 7 8
///   k 14
///   v 10110          (optional witness bits)
struct SsRecord {
    ss::SubsetSumInstance inst;
    std::optional<ss::SubsetSumWitness> witness;
};

std::string write_subset_sum(const SsRecord& record);
SsRecord read_subset_sum(std::istream& in);
SsRecord read_subset_sum_file(const std::string& path);
void write_subset_sum_file(const std::string& path, const SsRecord& record);

/// DIMACS CNF restricted to width-3 clauses. The optional assignment rides
/// in a recognized comment:
///   c assignment 10100
///   p cnf 5 4
///   3 -2 5 0
///   ...
struct CnfRecord {
    sat::Cnf3 phi;
    std::optional<sat::Assignment> assignment;
};

std::string write_dimacs(const CnfRecord& record);
CnfRecord read_dimacs(std::istream& in);
CnfRecord read_dimacs_file(const std::string& path);
void write_dimacs_file(const std::string& path, const CnfRecord& record);

/// Finite game description:
///   alphabets 2 2 2 2      (|I_A| |I_B| |O_A| |O_B|)
///   win 0 0 0 0            (x y a b tuples with V = 1; others are 0)
std::string write_game(const games::FiniteGame& game);
games::FiniteGame read_game(std::istream& in);
games::FiniteGame read_game_file(const std::string& path);
void write_game_file(const std::string& path, const games::FiniteGame& game);

void write_text_file(const std::string& path, const std::string& content);

} // namespace relzk::io
