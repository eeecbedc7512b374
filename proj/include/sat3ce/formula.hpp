#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sat3ce {

struct Literal {
  std::uint32_t var = 0; // 1-based
  bool negated = false;

  /// DIMACS signed form: -var when negated.
  std::int64_t to_dimacs() const {
    return negated ? -static_cast<std::int64_t>(var)
                   : static_cast<std::int64_t>(var);
  }
  static Literal from_dimacs(std::int64_t lit) {
    return {static_cast<std::uint32_t>(lit < 0 ? -lit : lit), lit < 0};
  }

  friend bool operator==(const Literal &, const Literal &) = default;
};

struct Clause {
  std::array<Literal, 3> lits;

  friend bool operator==(const Clause &, const Clause &) = default;
};

/// Truth values of variables 1..m; bit i holds variable i+1.
class Assignment {
public:
  Assignment() = default;
  explicit Assignment(std::size_t m, bool value = false) : bits_(m, value) {}
  explicit Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto &b : bits_)
      b = b ? 1 : 0;
  }

  /// Parses a 0/1 string, variable 1 leftmost.
  static Assignment from_string(std::string_view bits);
  /// Low m bits of `mask`; bit i is variable i+1.
  static Assignment from_mask(std::uint64_t mask, std::size_t m);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  /// Value of the 1-based variable `var`.
  bool value(std::uint32_t var) const { return bits_[var - 1] != 0; }
  void set(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }

  std::uint64_t to_mask() const;
  std::string to_string() const;

  friend bool operator==(const Assignment &, const Assignment &) = default;

private:
  std::vector<std::uint8_t> bits_;
};

inline bool literal_value(const Literal &lit, const Assignment &a) {
  return a.value(lit.var) != lit.negated;
}

/// Number of true literals in `c` under `a`; 0 means the clause is falsified.
inline int clause_class(const Clause &c, const Assignment &a) {
  return int(literal_value(c.lits[0], a)) + int(literal_value(c.lits[1], a)) +
         int(literal_value(c.lits[2], a));
}

/// binom(2m, 3), the largest clause count a formula over m variables may have.
std::uint64_t max_clause_count(std::uint32_t m);

/// A 3SAT instance. Construction validates every invariant and throws
/// sat3ce::Error on violation, so a Formula in hand is always well formed.
class Formula {
public:
  Formula(std::uint32_t m, std::vector<Clause> clauses);

  std::uint32_t num_vars() const { return m_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  const std::vector<Clause> &clauses() const { return clauses_; }
  const Clause &clause(std::size_t i) const { return clauses_[i]; }

  /// Indices (0-based) of clauses that repeat an earlier clause up to
  /// literal order.
  std::vector<std::size_t> duplicate_clauses() const;

  friend bool operator==(const Formula &, const Formula &) = default;

private:
  std::uint32_t m_;
  std::vector<Clause> clauses_;
};

struct Evaluation {
  bool satisfied = false;
  std::size_t unsat_count = 0;
};

Evaluation evaluate(const Formula &f, const Assignment &a);

struct ParseDiagnostics {
  std::vector<std::string> comments;
  std::vector<std::string> warnings;
};

Formula parse_dimacs(std::istream &in, ParseDiagnostics *diag = nullptr);
Formula parse_dimacs(std::string_view text, ParseDiagnostics *diag = nullptr);
Formula read_dimacs_file(const std::string &path,
                         ParseDiagnostics *diag = nullptr);

void write_dimacs(std::ostream &out, const Formula &f);
std::string to_dimacs(const Formula &f);

/// Uniform random 3SAT: three distinct variables per clause, independent
/// fair signs. Deterministic in `seed` (std::mt19937_64).
Formula gen_random(std::uint32_t m, std::uint64_t n, std::uint64_t seed);

} // namespace sat3ce
