#include "genus_forge/manifold.hpp"

#include <charconv>
#include <functional>

#include "genus_forge/char_calculus.hpp"

namespace genus {

std::string_view to_string(GenusKind kind) {
  switch (kind) {
    case GenusKind::Todd: return "todd";
    case GenusKind::Ahat: return "ahat";
    case GenusKind::Lhat: return "lhat";
    case GenusKind::Signature: return "signature";
  }
  return "?";
}

GenusKind parse_genus_kind(std::string_view name) {
  for (auto k : {GenusKind::Todd, GenusKind::Ahat, GenusKind::Lhat, GenusKind::Signature})
    if (to_string(k) == name) return k;
  throw Error(ErrorKind::DomainError, "unknown genus '" + std::string(name) + "'");
}

std::optional<int> ManifoldData::pontryagin_weight() const {
  if (real_dim % 4 != 0) return std::nullopt;
  return real_dim / 4;
}

namespace {

bool full_numbers(const CharNumbers& numbers, int top) {
  for (const auto& p : partitions_of(top))
    if (!numbers.contains(p)) return false;
  return true;
}

void check_numbers(const ManifoldData& m, const CharNumbers& numbers, int top, std::string_view what) {
  for (const auto& [p, value] : numbers) {
    if (p.empty() || weight(p) != top)
      throw Error(ErrorKind::InconsistentData, m.name + ": " + std::string(what) + " partition '" +
                                                   partition_key(p) + "' must sum to " + std::to_string(top));
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] < 1 || (i > 0 && p[i] > p[i - 1]))
        throw Error(ErrorKind::InconsistentData, m.name + ": partition '" + partition_key(p) + "' not canonical");
  }
}

}  // namespace

bool ManifoldData::has_full_pontryagin() const {
  auto w = pontryagin_weight();
  if (!w) return true;
  return full_numbers(pontryagin_numbers, *w);
}

bool ManifoldData::has_full_chern() const {
  return complex_dim && full_numbers(chern_numbers, *complex_dim);
}

void validate(const ManifoldData& m) {
  auto fail = [&](const std::string& rule) { throw Error(ErrorKind::InconsistentData, m.name + ": " + rule); };
  if (m.name.empty()) throw Error(ErrorKind::InconsistentData, "manifold without a name");
  if (m.real_dim <= 0 || m.real_dim % 2 != 0) fail("real_dim must be a positive even integer");
  if (m.complex_dim && 2 * *m.complex_dim != m.real_dim) fail("real_dim must equal 2*complex_dim");
  if (!m.complex_dim && !m.chern_numbers.empty()) fail("chern_numbers require complex_dim");
  if (m.string && !m.spin) fail("a string manifold must be spin");
  if (auto w = m.pontryagin_weight())
    check_numbers(m, m.pontryagin_numbers, *w, "pontryagin");
  else if (!m.pontryagin_numbers.empty())
    fail("pontryagin_numbers must be empty when 4 does not divide real_dim");
  if (m.complex_dim) check_numbers(m, m.chern_numbers, *m.complex_dim, "chern");
  const bool vacuous = !m.pontryagin_weight().has_value();
  if (m.pontryagin_numbers.empty() && m.chern_numbers.empty() && m.asserted_genera.empty() && !vacuous)
    fail("needs pontryagin_numbers, chern_numbers or asserted genera");
  if (m.asserted_genera.contains(GenusKind::Todd) && !m.complex_dim) fail("asserted Todd genus needs complex_dim");
}

CharClassPoly<Rational> genus_class(GenusKind kind, int weight_cap, int real_dim) {
  switch (kind) {
    case GenusKind::Todd:
      return multiplicative_class(todd_factor(weight_cap), ClassKind::chern, weight_cap);
    case GenusKind::Ahat:
      return multiplicative_class(ahat_factor(2 * weight_cap), ClassKind::pontryagin, weight_cap);
    case GenusKind::Signature:
      return multiplicative_class(signature_factor(2 * weight_cap), ClassKind::pontryagin, weight_cap);
    case GenusKind::Lhat: {
      // y/tanh(y/2) = 2 * (y/2)/tanh(y/2), one factor 2 per root, real_dim/2 roots.
      auto cls = multiplicative_class(lhat_unit_factor(2 * weight_cap), ClassKind::pontryagin, weight_cap);
      return cls * pow(Rational(2), static_cast<unsigned>(real_dim / 2));
    }
  }
  throw Error(ErrorKind::DomainError, "unknown genus kind");
}

ManifoldData chern_to_pontryagin(const ManifoldData& m) {
  if (!m.has_full_chern())
    throw Error(ErrorKind::InsufficientData, m.name + ": chern numbers are not fully populated");
  ManifoldData out = m;
  auto w = m.pontryagin_weight();
  if (!w) return out;
  const int n = *m.complex_dim;
  const Rational zero(0);
  using Poly = CharClassPoly<Rational>;
  auto c = [&](int i) {
    return i == 0 ? Poly::constant(ClassKind::chern, n, Rational(1))
                  : (i <= n ? Poly::generator(ClassKind::chern, n, i, zero) : Poly(ClassKind::chern, n, zero));
  };
  // p_k = (-1)^k sum_{i+j=2k} (-1)^i c_i c_j
  std::vector<Poly> p(static_cast<std::size_t>(*w) + 1, Poly(ClassKind::chern, n, zero));
  for (int k = 1; k <= *w; ++k) {
    Poly acc(ClassKind::chern, n, zero);
    for (int i = 0; i <= 2 * k; ++i) acc += c(i) * c(2 * k - i) * Rational(i % 2 == 0 ? 1 : -1);
    p[k] = acc * Rational(k % 2 == 0 ? 1 : -1);
  }
  CharNumbers computed;
  for (const auto& part : partitions_of(*w)) {
    Poly mono = Poly::constant(ClassKind::chern, n, Rational(1));
    for (int i : part) mono *= p[i];
    Rational value = pair_top(mono, m.chern_numbers, n);
    computed[part] = value.numerator().get_si();
  }
  for (const auto& [part, value] : m.pontryagin_numbers) {
    auto it = computed.find(part);
    if (it == computed.end() || it->second != value)
      throw Error(ErrorKind::InconsistentData, m.name + ": stored pontryagin number p_{" + partition_key(part) +
                                                   "} disagrees with the chern conversion");
  }
  out.pontryagin_numbers = std::move(computed);
  return out;
}

ManifoldData with_pontryagin(const ManifoldData& m) {
  if (m.has_full_pontryagin()) return m;
  if (m.has_full_chern()) return chern_to_pontryagin(m);
  throw Error(ErrorKind::InsufficientData, m.name + ": no full pontryagin or chern data");
}

GenusValue genus_value(const ManifoldData& m, GenusKind kind) {
  auto asserted = m.asserted_genera.find(kind);
  std::optional<Rational> computed;
  if (kind == GenusKind::Todd) {
    if (!m.complex_dim) throw Error(ErrorKind::DimensionError, m.name + ": Todd genus needs complex data");
    if (m.has_full_chern()) {
      const int n = *m.complex_dim;
      computed = pair_top(genus_class(kind, n, m.real_dim), m.chern_numbers, n);
    }
  } else {
    auto w = m.pontryagin_weight();
    if (!w) {
      computed = Rational(0);  // no top-degree Pontryagin class
    } else if (m.has_full_pontryagin() || m.has_full_chern()) {
      const ManifoldData data = with_pontryagin(m);
      computed = pair_top(genus_class(kind, *w, m.real_dim), data.pontryagin_numbers, *w);
    }
  }
  if (computed) {
    if (asserted != m.asserted_genera.end() && asserted->second != *computed)
      throw Error(ErrorKind::InconsistentData, m.name + ": asserted " + std::string(to_string(kind)) + " = " +
                                                   asserted->second.to_string() + " but computed " +
                                                   computed->to_string());
    return {*computed, false};
  }
  if (asserted != m.asserted_genera.end()) return {asserted->second, true};
  throw Error(ErrorKind::InsufficientData, m.name + ": no data for the " + std::string(to_string(kind)) + " genus");
}

namespace {

// Numbers of a x b for total classes that multiply (Whitney formula):
// each generator g_k(a x b) = sum_{r+s=k} g_r(a) g_s(b).
CharNumbers product_numbers(const CharNumbers& a, std::optional<int> top_a, const CharNumbers& b,
                            std::optional<int> top_b, int top) {
  CharNumbers out;
  for (const auto& lambda : partitions_of(top)) {
    long long total = 0;
    if (top_a && top_b) {
      Partition pa, pb;
      std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int wa, int wb) {
        if (wa > *top_a || wb > *top_b) return;
        if (i == lambda.size()) {
          if (wa != *top_a || wb != *top_b) return;
          Partition sa = pa, sb = pb;
          std::sort(sa.begin(), sa.end(), std::greater<>());
          std::sort(sb.begin(), sb.end(), std::greater<>());
          const long long na = sa.empty() ? 1 : a.at(sa);
          const long long nb = sb.empty() ? 1 : b.at(sb);
          total += na * nb;
          return;
        }
        for (int r = 0; r <= lambda[i]; ++r) {
          const int s = lambda[i] - r;
          if (r) pa.push_back(r);
          if (s) pb.push_back(s);
          rec(i + 1, wa + r, wb + s);
          if (r) pa.pop_back();
          if (s) pb.pop_back();
        }
      };
      rec(0, 0, 0);
    }
    out[lambda] = total;
  }
  return out;
}

}  // namespace

ManifoldData product(const ManifoldData& a, const ManifoldData& b) {
  ManifoldData out;
  out.name = a.name + "x" + b.name;
  out.real_dim = a.real_dim + b.real_dim;
  out.spin = a.spin && b.spin;
  out.string = a.string && b.string;
  bool any = false;
  if (a.has_full_chern() && b.has_full_chern()) {
    out.complex_dim = *a.complex_dim + *b.complex_dim;
    out.chern_numbers = product_numbers(a.chern_numbers, a.complex_dim, b.chern_numbers, b.complex_dim,
                                        *out.complex_dim);
    any = true;
  }
  const bool pa = a.has_full_pontryagin() || a.has_full_chern();
  const bool pb = b.has_full_pontryagin() || b.has_full_chern();
  if (pa && pb) {
    const ManifoldData ca = with_pontryagin(a), cb = with_pontryagin(b);
    if (auto w = out.pontryagin_weight())
      out.pontryagin_numbers = product_numbers(ca.pontryagin_numbers, ca.pontryagin_weight(), cb.pontryagin_numbers,
                                               cb.pontryagin_weight(), *w);
    any = true;
  }
  if (!any)
    throw Error(ErrorKind::InsufficientData,
                "product " + out.name + " needs full characteristic numbers on both factors");
  return out;
}

ManifoldData connected_sum(const ManifoldData& a, const ManifoldData& b) {
  if (a.real_dim != b.real_dim)
    throw Error(ErrorKind::DimensionError, "connected sum of " + a.name + " and " + b.name + " needs equal dimensions");
  ManifoldData out;
  out.name = a.name + "_sharp_" + b.name;
  out.real_dim = a.real_dim;
  out.spin = a.spin && b.spin;
  out.string = a.string && b.string;
  const bool full_a = a.has_full_pontryagin() || a.has_full_chern();
  const bool full_b = b.has_full_pontryagin() || b.has_full_chern();
  if (full_a && full_b) {
    const ManifoldData ca = with_pontryagin(a), cb = with_pontryagin(b);
    out.pontryagin_numbers = ca.pontryagin_numbers;
    for (const auto& [p, v] : cb.pontryagin_numbers) out.pontryagin_numbers[p] += v;
    return out;
  }
  // Asserted values add; a genus is kept only when both summands provide it.
  for (auto kind : {GenusKind::Ahat, GenusKind::Lhat, GenusKind::Signature}) {
    if (!a.asserted_genera.contains(kind) && !b.asserted_genera.contains(kind)) continue;
    try {
      out.asserted_genera[kind] = genus_value(a, kind).value + genus_value(b, kind).value;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InsufficientData) throw;
    }
  }
  if (out.asserted_genera.empty())
    throw Error(ErrorKind::InsufficientData,
                "connected sum " + out.name + " needs pontryagin numbers or asserted genera on both summands");
  return out;
}

ManifoldData complex_projective(int n) {
  if (n < 1) throw Error(ErrorKind::DomainError, "CP^n needs n >= 1");
  ManifoldData m;
  m.name = "CP" + std::to_string(n);
  m.real_dim = 2 * n;
  m.complex_dim = n;
  // c = (1+h)^{n+1}, p = (1+h^2)^{n+1}, <h^n,[CP^n]> = 1.
  auto number = [&](const Partition& part) {
    Rational v(1);
    for (int i : part) v *= binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>(i));
    return v.numerator().get_si();
  };
  for (const auto& part : partitions_of(n)) m.chern_numbers[part] = number(part);
  if (auto w = m.pontryagin_weight())
    for (const auto& part : partitions_of(*w)) m.pontryagin_numbers[part] = number(part);
  m.spin = n % 2 == 1;
  return m;
}

ManifoldData sphere(int n) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorKind::DomainError, "only even-dimensional spheres S^n, n >= 2");
  ManifoldData m;
  m.name = "S" + std::to_string(n);
  m.real_dim = n;
  if (auto w = m.pontryagin_weight())
    for (const auto& part : partitions_of(*w)) m.pontryagin_numbers[part] = 0;
  m.spin = true;
  m.string = true;
  return m;
}

ManifoldData torus(int k) {
  if (k < 2 || k % 2 != 0) throw Error(ErrorKind::DomainError, "only even-dimensional tori T^k, k >= 2");
  ManifoldData m;
  m.name = "T" + std::to_string(k);
  m.real_dim = k;
  m.complex_dim = k / 2;
  for (const auto& part : partitions_of(k / 2)) m.chern_numbers[part] = 0;
  if (auto w = m.pontryagin_weight())
    for (const auto& part : partitions_of(*w)) m.pontryagin_numbers[part] = 0;
  m.spin = true;
  m.string = true;
  return m;
}

ManifoldData k3_surface() {
  ManifoldData m;
  m.name = "K3";
  m.real_dim = 4;
  m.complex_dim = 2;
  m.chern_numbers = {{{1, 1}, 0}, {{2}, 24}};
  m.pontryagin_numbers = {{{1}, -48}};
  m.spin = true;
  return m;
}

ManifoldData quaternionic_projective_plane() {
  ManifoldData m;
  m.name = "HP2";
  m.real_dim = 8;
  m.pontryagin_numbers = {{{1, 1}, 4}, {{2}, 7}};
  m.spin = true;
  return m;
}

namespace {

std::optional<int> parse_suffix(std::string_view name, std::string_view prefix) {
  if (!name.starts_with(prefix) || name.size() == prefix.size()) return std::nullopt;
  int v = 0;
  auto rest = name.substr(prefix.size());
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
  if (ec != std::errc() || ptr != rest.data() + rest.size()) return std::nullopt;
  return v;
}

}  // namespace

bool is_builtin_name(std::string_view name) {
  return name == "K3" || name == "HP2" || parse_suffix(name, "CP") || parse_suffix(name, "S") ||
         parse_suffix(name, "T");
}

ManifoldData builtin(std::string_view name) {
  try {
    if (name == "K3") return k3_surface();
    if (name == "HP2") return quaternionic_projective_plane();
    if (auto n = parse_suffix(name, "CP")) return complex_projective(*n);
    if (auto n = parse_suffix(name, "S")) return sphere(*n);
    if (auto n = parse_suffix(name, "T")) return torus(*n);
  } catch (const Error& e) {
    throw Error(ErrorKind::UnknownManifold, std::string(name) + " (" + e.what() + ")");
  }
  throw Error(ErrorKind::UnknownManifold, "no builtin manifold named '" + std::string(name) + "'");
}

}  // namespace genus
