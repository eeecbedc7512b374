#include "sat3ce/formula.hpp"

#include "sat3ce/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace sat3ce {

Assignment Assignment::from_string(std::string_view bits) {
  std::vector<std::uint8_t> out;
  out.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw Error(ErrorCode::InvalidArgument,
                  "assignment must be a string of 0/1 characters");
    out.push_back(c == '1');
  }
  return Assignment(std::move(out));
}

Assignment Assignment::from_mask(std::uint64_t mask, std::size_t m) {
  Assignment a(m);
  for (std::size_t i = 0; i < m; ++i)
    a.bits_[i] = (mask >> i) & 1u;
  return a;
}

std::uint64_t Assignment::to_mask() const {
  if (bits_.size() > 64)
    throw Error(ErrorCode::TooLarge, "assignment wider than 64 bits");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    mask |= std::uint64_t(bits_[i]) << i;
  return mask;
}

std::string Assignment::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i])
      s[i] = '1';
  return s;
}

std::uint64_t max_clause_count(std::uint32_t m) {
  const std::uint64_t k = 2 * std::uint64_t(m);
  if (k < 3)
    return 0;
  return k * (k - 1) * (k - 2) / 6;
}

Formula::Formula(std::uint32_t m, std::vector<Clause> clauses)
    : m_(m), clauses_(std::move(clauses)) {
  if (m_ == 0)
    throw Error(ErrorCode::InvalidSize, "formula needs at least one variable");
  if (clauses_.size() > max_clause_count(m_))
    throw Error(ErrorCode::InvalidSize,
                "clause count " + std::to_string(clauses_.size()) +
                    " exceeds binom(2m,3) = " +
                    std::to_string(max_clause_count(m_)));
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    const auto &l = clauses_[i].lits;
    for (const auto &lit : l)
      if (lit.var < 1 || lit.var > m_)
        throw Error(ErrorCode::VariableOutOfRange,
                    "clause " + std::to_string(i + 1) + " references variable " +
                        std::to_string(lit.var) + " outside 1.." +
                        std::to_string(m_));
    if (l[0].var == l[1].var || l[0].var == l[2].var || l[1].var == l[2].var)
      throw Error(ErrorCode::NotThreeSat,
                  "clause " + std::to_string(i + 1) + " repeats a variable");
  }
}

std::vector<std::size_t> Formula::duplicate_clauses() const {
  std::map<std::array<std::int64_t, 3>, std::size_t> seen;
  std::vector<std::size_t> dups;
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    std::array<std::int64_t, 3> key{};
    for (int s = 0; s < 3; ++s)
      key[s] = clauses_[i].lits[s].to_dimacs();
    std::sort(key.begin(), key.end());
    if (!seen.emplace(key, i).second)
      dups.push_back(i);
  }
  return dups;
}

Evaluation evaluate(const Formula &f, const Assignment &a) {
  if (a.size() != f.num_vars())
    throw Error(ErrorCode::LengthMismatch,
                "assignment has " + std::to_string(a.size()) +
                    " bits, formula has " + std::to_string(f.num_vars()) +
                    " variables");
  Evaluation ev;
  for (const auto &c : f.clauses())
    if (clause_class(c, a) == 0)
      ++ev.unsat_count;
  ev.satisfied = ev.unsat_count == 0;
  return ev;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

template <typename Int> bool parse_int(std::string_view tok, Int &out) {
  const char *first = tok.data();
  if (!tok.empty() && tok.front() == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
      ++j;
    if (j > i)
      out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

} // namespace

Formula parse_dimacs(std::istream &in, ParseDiagnostics *diag) {
  bool have_header = false;
  std::uint32_t m = 0;
  std::uint64_t n = 0;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;
  std::size_t lineno = 0;

  auto finish_clause = [&] {
    if (pending.size() != 3)
      throw Error(ErrorCode::NotThreeSat,
                  "clause " + std::to_string(clauses.size() + 1) + " has " +
                      std::to_string(pending.size()) + " literals, expected 3");
    for (const auto &lit : pending)
      if (lit.var > m)
        throw Error(ErrorCode::VariableOutOfRange,
                    "literal " + std::to_string(lit.to_dimacs()) +
                        " exceeds declared variable count " +
                        std::to_string(m));
    if (pending[0].var == pending[1].var || pending[0].var == pending[2].var ||
        pending[1].var == pending[2].var)
      throw Error(ErrorCode::NotThreeSat,
                  "clause " + std::to_string(clauses.size() + 1) +
                      " repeats a variable");
    clauses.push_back(Clause{{pending[0], pending[1], pending[2]}});
    pending.clear();
  };

  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string_view line = trim(raw);
    if (line.empty())
      continue;
    if (line.front() == 'c') {
      if (diag)
        diag->comments.emplace_back(trim(line.substr(1)));
      continue;
    }
    if (line.front() == '%') // SATLIB end marker
      break;
    if (line.front() == 'p') {
      if (have_header)
        throw Error(ErrorCode::MalformedHeader,
                    "second header on line " + std::to_string(lineno));
      const auto toks = split_ws(line);
      if (toks.size() != 4 || toks[0] != "p" || toks[1] != "cnf" ||
          !parse_int(toks[2], m) || !parse_int(toks[3], n))
        throw Error(ErrorCode::MalformedHeader,
                    "expected 'p cnf <vars> <clauses>' on line " +
                        std::to_string(lineno));
      if (m == 0)
        throw Error(ErrorCode::MalformedHeader,
                    "variable count must be at least 1");
      have_header = true;
      continue;
    }
    if (!have_header)
      throw Error(ErrorCode::MalformedHeader,
                  "clause data before 'p cnf' header on line " +
                      std::to_string(lineno));
    for (auto tok : split_ws(line)) {
      std::int64_t lit = 0;
      if (!parse_int(tok, lit))
        throw Error(ErrorCode::MalformedBody, "invalid literal '" +
                                                  std::string(tok) +
                                                  "' on line " +
                                                  std::to_string(lineno));
      if (lit == 0) {
        finish_clause();
        continue;
      }
      if (lit > std::int64_t(m) || lit < -std::int64_t(m))
        throw Error(ErrorCode::VariableOutOfRange,
                    "literal " + std::to_string(lit) + " on line " +
                        std::to_string(lineno) +
                        " exceeds declared variable count " +
                        std::to_string(m));
      pending.push_back(Literal::from_dimacs(lit));
    }
  }
  if (!have_header)
    throw Error(ErrorCode::MalformedHeader, "missing 'p cnf' header");
  // A final clause without its terminating 0 is accepted.
  if (!pending.empty())
    finish_clause();
  if (clauses.size() != n)
    throw Error(ErrorCode::ClauseCountMismatch,
                "header declares " + std::to_string(n) + " clauses, found " +
                    std::to_string(clauses.size()));

  Formula f(m, std::move(clauses));
  if (diag)
    for (auto i : f.duplicate_clauses())
      diag->warnings.push_back("duplicate clause " + std::to_string(i + 1));
  return f;
}

Formula parse_dimacs(std::string_view text, ParseDiagnostics *diag) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in, diag);
}

Formula read_dimacs_file(const std::string &path, ParseDiagnostics *diag) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  return parse_dimacs(in, diag);
}

void write_dimacs(std::ostream &out, const Formula &f) {
  out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  for (const auto &c : f.clauses())
    out << c.lits[0].to_dimacs() << ' ' << c.lits[1].to_dimacs() << ' '
        << c.lits[2].to_dimacs() << " 0\n";
}

std::string to_dimacs(const Formula &f) {
  std::ostringstream out;
  write_dimacs(out, f);
  return out.str();
}

Formula gen_random(std::uint32_t m, std::uint64_t n, std::uint64_t seed) {
  if (m < 3)
    throw Error(ErrorCode::InvalidSize, "gen_random needs m >= 3");
  if (n < 1 || n > max_clause_count(m))
    throw Error(ErrorCode::InvalidSize,
                "clause count must lie in 1..binom(2m,3) = " +
                    std::to_string(max_clause_count(m)));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick_var(1, m);
  std::vector<Clause> clauses;
  clauses.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    Clause c;
    for (int s = 0; s < 3; ++s) {
      std::uint32_t v;
      do {
        v = pick_var(rng);
      } while ((s > 0 && v == c.lits[0].var) || (s > 1 && v == c.lits[1].var));
      c.lits[s].var = v;
    }
    const auto signs = rng();
    for (int s = 0; s < 3; ++s)
      c.lits[s].negated = (signs >> s) & 1u;
    clauses.push_back(c);
  }
  return Formula(m, std::move(clauses));
}

} // namespace sat3ce
