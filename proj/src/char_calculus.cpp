#include "genus_forge/char_calculus.hpp"

#include <sstream>

namespace genus {

std::string partition_key(const Partition& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  return os.str();
}

Partition parse_partition(const std::string& key) {
  Partition out;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    const auto comma = key.find(',', pos);
    const std::string part = key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorKind::CatalogError, "malformed partition key '" + key + "'");
    const int v = std::stoi(part);
    if (v < 1) throw Error(ErrorKind::CatalogError, "partition parts must be positive in '" + key + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  if (n >= 0) partitions_rec(n, n, cur, out);
  return out;
}

std::vector<CharClassPoly<Rational>> power_sums(ClassKind kind, int weight_cap, int roots) {
  const Rational zero(0);
  auto e = [&](int i) {
    return i <= roots || roots <= 0 ? CharClassPoly<Rational>::generator(kind, weight_cap, i, zero)
                                    : CharClassPoly<Rational>(kind, weight_cap, zero);
  };
  // P_n = sum_{i=1}^{n-1} (-1)^{i-1} e_i P_{n-i} + (-1)^{n-1} n e_n
  std::vector<CharClassPoly<Rational>> sums;
  for (int n = 1; n <= weight_cap; ++n) {
    CharClassPoly<Rational> pn = e(n) * Rational(n % 2 == 1 ? n : -n);
    for (int i = 1; i < n; ++i) {
      auto term = e(i) * sums[n - i - 1];
      if (i % 2 == 1)
        pn += term;
      else
        pn -= term;
    }
    sums.push_back(std::move(pn));
  }
  return sums;
}

YSeries<Rational> ahat_factor(int y_cap) {
  // sinh(y/2)/(y/2) = sum (y/2)^{2k} / (2k+1)!
  YSeries<Rational> s(y_cap, Rational(0));
  for (int k = 0; 2 * k <= y_cap; ++k) s[2 * k] = pow(Rational(1, 2), 2 * k) / factorial(2 * k + 1);
  return inverse(s);
}

YSeries<Rational> lhat_unit_factor(int y_cap) {
  YSeries<Rational> c(y_cap, Rational(0));
  for (int k = 0; 2 * k <= y_cap; ++k) c[2 * k] = pow(Rational(1, 2), 2 * k) / factorial(2 * k);
  return c * ahat_factor(y_cap);
}

YSeries<Rational> signature_factor(int y_cap) {
  YSeries<Rational> sinc(y_cap, Rational(0)), cosh(y_cap, Rational(0));
  for (int k = 0; 2 * k <= y_cap; ++k) {
    sinc[2 * k] = reciprocal(factorial(2 * k + 1));
    cosh[2 * k] = reciprocal(factorial(2 * k));
  }
  return cosh * inverse(sinc);
}

YSeries<Rational> todd_factor(int z_cap) {
  // (1 - e^{-z})/z = sum (-1)^k z^k / (k+1)!
  YSeries<Rational> s(z_cap, Rational(0));
  for (int k = 0; k <= z_cap; ++k) s[k] = Rational(k % 2 == 0 ? 1 : -1) / factorial(k + 1);
  return inverse(s);
}

Rational hypersurface_todd(int n, const Rational& d_power_number) {
  if (n <= 0) throw Error(ErrorKind::DimensionError, "hypersurface dimension must be positive");
  // 1 - e^{-d} as a series, then divide by d.
  YSeries<Rational> numer = exp_linear(n + 1, Rational(-1)) * Rational(-1);
  numer[0] += Rational(1);
  return numer.shifted_down(1)[n] * d_power_number;
}

}  // namespace genus
