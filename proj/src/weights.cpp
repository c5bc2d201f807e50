#include "glmn/weights.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace glmn {

namespace {

bool weakly_decreasing(const std::vector<long>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return true;
}

std::vector<long> parse_list(std::string_view text) {
  std::vector<long> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw std::invalid_argument("cannot parse integer '" + std::string(item) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

bool Weight::is_dominant() const { return weakly_decreasing(plus) && weakly_decreasing(minus); }

bool Weight::is_polynomial() const {
  return (plus.empty() || plus.back() >= 0) && (minus.empty() || minus.back() >= 0);
}

Weight Weight::dominant(std::vector<long> plus, std::vector<long> minus) {
  Weight w{std::move(plus), std::move(minus)};
  require_dominant(w);
  return w;
}

void require_dominant(const Weight& lambda) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("weight " + format_weight(lambda) +
                                " is not dominant; H0(lambda) is nonzero only for dominant lambda");
}

Weight parse_weight(std::string_view text, int m, int n) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    throw std::invalid_argument("weight must have the form a1,...,am|b1,...,bn");
  Weight w{parse_list(text.substr(0, bar)), parse_list(text.substr(bar + 1))};
  if (w.plus.empty() || w.minus.empty()) throw std::invalid_argument("weight parts must be nonempty");
  if (m > 0 && w.m() != m)
    throw std::invalid_argument("weight has " + std::to_string(w.m()) + " even entries, expected m = " + std::to_string(m));
  if (n > 0 && w.n() != n)
    throw std::invalid_argument("weight has " + std::to_string(w.n()) + " odd entries, expected n = " + std::to_string(n));
  return w;
}

std::string format_weight(const Weight& lambda) { return join(lambda.plus) + "|" + join(lambda.minus); }

Partition normalize_partition(Partition parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (!weakly_decreasing(parts)) throw std::invalid_argument("partition parts must be weakly decreasing");
  if (!parts.empty() && parts.back() < 0) throw std::invalid_argument("partition parts must be non-negative");
  return parts;
}

Partition conjugate(const Partition& p) {
  Partition q = normalize_partition(p);
  Partition c;
  if (q.empty()) return c;
  for (long k = 1; k <= q.front(); ++k) {
    long count = 0;
    for (long part : q)
      if (part >= k) ++count;
    c.push_back(count);
  }
  return c;
}

Partition parse_partition(std::string_view text) { return normalize_partition(parse_list(text)); }

std::string format_partition(const Partition& p) { return join(p); }

bool is_hook(const Partition& lambda, int m, int n) {
  Partition q = normalize_partition(lambda);
  return static_cast<int>(q.size()) <= m || q[m] <= n;
}

long omega(const Weight& lambda, int i, int j) {
  if (i < 1 || i > lambda.m() || j < 1 || j > lambda.n()) throw std::out_of_range("omega: index out of range");
  return lambda.plus[i - 1] + lambda.minus[j - 1] + lambda.m() + 1 - i - j;
}

TypicalityReport is_typical(const Weight& lambda, std::uint32_t characteristic) {
  if (characteristic == 2) throw std::invalid_argument("characteristic 2 is excluded");
  TypicalityReport report;
  report.omega_matrix.assign(lambda.m(), std::vector<long>(lambda.n()));
  for (int i = 1; i <= lambda.m(); ++i) {
    for (int j = 1; j <= lambda.n(); ++j) {
      long w = omega(lambda, i, j);
      report.omega_matrix[i - 1][j - 1] = w;
      bool atypical = characteristic == 0 ? w == 0 : w % static_cast<long>(characteristic) == 0;
      if (atypical) report.atypical_positions.emplace_back(i, j);
    }
  }
  report.typical = report.atypical_positions.empty();
  return report;
}

long omega_row_product(const Weight& lambda, int i) {
  long prod = 1;
  for (int j = 1; j <= lambda.n(); ++j) prod *= omega(lambda, i, j);
  return prod;
}

Weight hook_to_weight(const Partition& lambda, int m, int n) {
  Partition q = normalize_partition(lambda);
  if (!is_hook(q, m, n))
    throw std::invalid_argument("partition " + format_partition(q) + " is not an (m|n)-hook partition");
  Weight w;
  w.plus.assign(m, 0);
  for (int i = 0; i < m && i < static_cast<int>(q.size()); ++i) w.plus[i] = q[i];
  Partition rest;
  if (static_cast<int>(q.size()) > m) rest.assign(q.begin() + m, q.end());
  Partition c = conjugate(rest);
  w.minus.assign(n, 0);
  for (std::size_t j = 0; j < c.size(); ++j) w.minus[j] = c[j];
  return w;
}

Partition weight_to_hook(const Weight& lambda) {
  require_dominant(lambda);
  if (!lambda.is_polynomial()) throw std::invalid_argument("weight_to_hook needs a polynomial weight");
  const int m = lambda.m();
  const int n = lambda.n();
  Partition minus_part = normalize_partition(lambda.minus);
  Partition tail = conjugate(minus_part);
  if (!tail.empty() && lambda.plus[m - 1] < tail.front())
    throw std::invalid_argument("weight " + format_weight(lambda) + " does not come from an (m|n)-hook partition");
  Partition p(lambda.plus.begin(), lambda.plus.end());
  p.insert(p.end(), tail.begin(), tail.end());
  p = normalize_partition(p);
  if (!is_hook(p, m, n)) throw std::invalid_argument("weight does not come from an (m|n)-hook partition");
  return p;
}

Weight shift_by_beta(const Weight& lambda, long t) {
  Weight w = lambda;
  for (auto& a : w.plus) a -= t;
  for (auto& b : w.minus) b += t;
  return w;
}

Normalized berezin_normalize(const Weight& lambda) {
  require_dominant(lambda);
  long twist = lambda.minus.back();
  return {shift_by_beta(lambda, -twist), twist};
}

Weight kappa_weight(const Weight& lambda) {
  Weight w = lambda;
  for (auto& a : w.plus) a -= lambda.n();
  for (auto& b : w.minus) b += lambda.m();
  return w;
}

}  // namespace glmn
