#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ppk/errors.hpp"
#include "ppk/synth.hpp"

namespace ppk::test {

inline std::string data_path(const std::string& name) { return std::string(PPK_TEST_DATA_DIR) + "/" + name; }

/// Rows of whitespace-separated integers.
inline std::vector<std::vector<std::uint64_t>> load_table(const std::string& name) {
  std::ifstream in(data_path(name));
  if (!in) throw UsageError("missing data file " + name);
  std::vector<std::vector<std::uint64_t>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::uint64_t> row;
    std::uint64_t v;
    while (ls >> v) row.push_back(v);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

/// Lines "coeff X[w]^k*X[v]" for p = 2.
inline BlockPolynomial load_block_polynomial(const std::string& name, unsigned j) {
  std::ifstream in(data_path(name));
  if (!in) throw UsageError("missing data file " + name);
  BlockPolynomial P{2, j, {}};
  std::string coeff, mono;
  while (in >> coeff >> mono) {
    std::vector<Monomial::Factor> fs;
    std::istringstream ms(mono);
    std::string part;
    while (std::getline(ms, part, '*')) {
      const auto close = part.find(']');
      const unsigned k = close + 1 < part.size() ? static_cast<unsigned>(std::stoul(part.substr(close + 2))) : 1;
      fs.emplace_back(Word::parse(part.substr(2, close - 2), 2), k);
    }
    P.terms.emplace(Monomial(std::move(fs)), Rational::parse(coeff));
  }
  return P;
}

}  // namespace ppk::test
