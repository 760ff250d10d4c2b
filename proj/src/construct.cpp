#include "ncng/construct.hpp"

#include "ncng/errors.hpp"
#include "ncng/gf2k.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <unordered_map>

namespace ncng {

namespace {

using Key = std::vector<std::uint32_t>;

struct KeyHash {
  std::size_t operator()(const Key& k) const { return boost::hash_range(k.begin(), k.end()); }
};

/// Elements as opaque keys with an associative multiplication.
struct ElementModel {
  Key identity;
  std::vector<Key> generators;
  std::function<Key(const Key&, const Key&)> mul;
  std::function<std::string(const Key&)> label;
};

FiniteGroup close_under_generators(const ElementModel& model, std::size_t cap) {
  const std::size_t ngens = model.generators.size();
  std::vector<Key> elements{model.identity};
  std::unordered_map<Key, Elem, KeyHash> index{{model.identity, 0}};
  std::vector<Elem> parent{0};
  std::vector<std::uint32_t> via{0};
  std::vector<Elem> right;  // right[e * ngens + i] = e * gen_i

  for (std::size_t e = 0; e < elements.size(); ++e) {
    for (std::size_t i = 0; i < ngens; ++i) {
      Key product = model.mul(elements[e], model.generators[i]);
      auto [it, inserted] = index.try_emplace(product, static_cast<Elem>(elements.size()));
      if (inserted) {
        if (elements.size() >= cap) throw OrderCapExceeded(elements.size() + 1, cap);
        elements.push_back(std::move(product));
        parent.push_back(static_cast<Elem>(e));
        via.push_back(static_cast<std::uint32_t>(i));
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = elements.size();
  if (n > FiniteGroup::kMaxOrder) throw OrderCapExceeded(n, FiniteGroup::kMaxOrder);
  // Column b = parent(b) * gen, so a*b = (a*parent(b)) * gen.
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) table[a * n] = static_cast<std::uint16_t>(a);
  for (std::size_t b = 1; b < n; ++b) {
    const std::size_t pb = parent[b];
    const std::size_t g = via[b];
    for (std::size_t a = 0; a < n; ++a) {
      const Elem ap = table[a * n + pb];
      table[a * n + b] = static_cast<std::uint16_t>(right[ap * ngens + g]);
    }
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& k : elements) labels.push_back(model.label(k));

  std::vector<Elem> gens;
  for (const auto& k : model.generators) {
    const Elem g = index.at(k);
    if (g != 0 && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  return FiniteGroup(n, std::move(table), std::move(labels), std::move(gens));
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

void require_within_cap(std::size_t predicted, std::size_t cap) {
  if (predicted > cap) throw OrderCapExceeded(predicted, cap);
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// ---- permutations (right action: (p*q)(i) = q(p(i))) ----

Key perm_mul(const Key& p, const Key& q) {
  Key r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

std::string cycle_label(const Key& p) {
  std::string out;
  std::vector<char> seen(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ',';
      first = false;
      out += std::to_string(j + 1);
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Key cycles_to_perm(const std::vector<std::vector<unsigned>>& cycles, std::size_t degree) {
  Key p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i] - 1] = c[(i + 1) % c.size()] - 1;
  }
  return p;
}

ElementModel permutation_model(std::size_t degree, std::vector<Key> gens) {
  Key id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  return {std::move(id), std::move(gens), perm_mul, cycle_label};
}

std::size_t factorial_capped(unsigned n) {
  std::size_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f = saturating_mul(f, i);
  return f;
}

FiniteGroup build_symmetric(unsigned n, std::size_t cap) {
  require_within_cap(factorial_capped(n), cap);
  std::vector<Key> gens;
  if (n >= 2) gens.push_back(cycles_to_perm({{1, 2}}, n));
  if (n >= 3) {
    std::vector<unsigned> full(n);
    for (unsigned i = 0; i < n; ++i) full[i] = i + 1;
    gens.push_back(cycles_to_perm({full}, n));
  }
  return close_under_generators(permutation_model(n, std::move(gens)), cap);
}

FiniteGroup build_alternating(unsigned n, std::size_t cap) {
  require_within_cap(n >= 2 ? factorial_capped(n) / 2 : 1, cap);
  std::vector<Key> gens;
  for (unsigned i = 3; i <= n; ++i) gens.push_back(cycles_to_perm({{1, 2, i}}, n));
  return close_under_generators(permutation_model(n, std::move(gens)), cap);
}

FiniteGroup build_perm(const PermGroup& spec, std::size_t cap) {
  std::size_t degree = 1;
  for (const auto& g : spec.generators)
    for (const auto& c : g)
      for (unsigned p : c) degree = std::max<std::size_t>(degree, p);
  std::vector<Key> gens;
  for (const auto& g : spec.generators) gens.push_back(cycles_to_perm(g, degree));
  return close_under_generators(permutation_model(degree, std::move(gens)), cap);
}

FiniteGroup build_cyclic(unsigned n, std::size_t cap) {
  require_within_cap(n, cap);
  ElementModel m;
  m.identity = {0};
  if (n > 1) m.generators = {{1}};
  m.mul = [n](const Key& a, const Key& b) { return Key{(a[0] + b[0]) % n}; };
  m.label = [](const Key& k) {
    if (k[0] == 0) return std::string("1");
    return k[0] == 1 ? std::string("a") : "a^" + std::to_string(k[0]);
  };
  return close_under_generators(m, cap);
}

FiniteGroup build_dihedral(unsigned n, std::size_t cap) {
  require_within_cap(saturating_mul(2, n), cap);
  ElementModel m;
  m.identity = {0, 0};
  if (n > 1) m.generators.push_back({1, 0});
  m.generators.push_back({0, 1});
  // r^a s^e * r^b s^f = r^(a +- b) s^(e+f), since s r = r^-1 s.
  m.mul = [n](const Key& x, const Key& y) {
    const std::uint32_t turn = x[1] ? (n - y[0]) % n : y[0];
    return Key{(x[0] + turn) % n, x[1] ^ y[1]};
  };
  m.label = [](const Key& k) {
    std::string out;
    if (k[0] == 1) out = "r";
    if (k[0] > 1) out = "r^" + std::to_string(k[0]);
    if (k[1]) out += "s";
    return out.empty() ? std::string("1") : out;
  };
  return close_under_generators(m, cap);
}

FiniteGroup build_quaternion(std::size_t cap) {
  require_within_cap(8, cap);
  // unit_mul[a][b] = {sign, unit} for units 1,i,j,k.
  static constexpr std::uint32_t unit_mul[4][4][2] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  ElementModel m;
  m.identity = {0, 0};
  m.generators = {{0, 1}, {0, 2}};
  m.mul = [](const Key& x, const Key& y) {
    const auto* r = unit_mul[x[1]][y[1]];
    return Key{x[0] ^ y[0] ^ r[0], r[1]};
  };
  m.label = [](const Key& k) {
    static const char* names[] = {"1", "i", "j", "k"};
    return std::string(k[0] ? "-" : "") + names[k[1]];
  };
  return close_under_generators(m, cap);
}

FiniteGroup build_sl23(std::size_t cap) {
  require_within_cap(24, cap);
  ElementModel m;
  m.identity = {1, 0, 0, 1};
  m.generators = {{1, 1, 0, 1}, {1, 0, 1, 1}};
  m.mul = [](const Key& x, const Key& y) {
    return Key{(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3,
               (x[2] * y[0] + x[3] * y[2]) % 3, (x[2] * y[1] + x[3] * y[3]) % 3};
  };
  m.label = [](const Key& k) {
    return "[" + std::to_string(k[0]) + "," + std::to_string(k[1]) + ";" + std::to_string(k[2]) + "," +
           std::to_string(k[3]) + "]";
  };
  return close_under_generators(m, cap);
}

FiniteGroup build_agl(unsigned p, std::size_t cap) {
  if (!is_prime(p)) throw InvalidSpec("AGL(1,p) needs a prime p, got " + std::to_string(p));
  require_within_cap(saturating_mul(p, p - 1), cap);
  unsigned root = 1;
  for (unsigned g = 1; g < p; ++g) {
    unsigned order = 1;
    for (unsigned x = g; x != 1; x = x * g % p) ++order;
    if (order == p - 1) {
      root = g;
      break;
    }
  }
  ElementModel m;
  m.identity = {1, 0};
  // Key {a,b} is x -> a*x + b; maps compose left to right.
  m.generators = {{1, 1 % p}, {root, 0}};
  m.mul = [p](const Key& x, const Key& y) { return Key{x[0] * y[0] % p, (y[0] * x[1] + y[1]) % p}; };
  m.label = [](const Key& k) {
    std::string out = k[0] == 1 ? "x" : std::to_string(k[0]) + "x";
    if (k[1] != 0) out += "+" + std::to_string(k[1]);
    return out;
  };
  return close_under_generators(m, cap);
}

std::string suzuki_label(const Key& k) {
  std::string out = "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + ")";
  if (k.size() > 2 && k[2] != 0) out += k[2] == 1 ? "c" : "c^" + std::to_string(k[2]);
  return out;
}

FiniteGroup build_suzuki(unsigned k, unsigned r, std::size_t cap) {
  if (k % 2 == 0 || k < 3) throw EvenDegree(k);
  if (k > 7) throw InvalidSpec("Suzuki construction supports field degrees 3, 5 and 7");
  const GF2kField field(k);
  const GF2kField::Element kappa = torus_element(field, r);
  const std::size_t q = field.size();
  require_within_cap(saturating_mul(q * q, r), cap);

  // The torus map must preserve the Suzuki product; check every pair.
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          const SuzukiPoint x{a, b}, y{c, d};
          if (suzuki_torus_action(field, kappa, suzuki_mul(field, x, y)) !=
              suzuki_mul(field, suzuki_torus_action(field, kappa, x), suzuki_torus_action(field, kappa, y))) {
            throw InvalidAction("torus map is not an automorphism of the Suzuki 2-group");
          }
        }

  std::vector<GF2kField::Element> kappa_pow(r);
  for (unsigned t = 0; t < r; ++t) kappa_pow[t] = field.pow(kappa, t);

  ElementModel m;
  m.identity = {0, 0, 0};
  for (unsigned i = 0; i < k; ++i) m.generators.push_back({1u << i, 0, 0});
  if (r > 1) m.generators.push_back({0, 0, 1});
  // (p, t)(p', t') = (p * f^t(p'), t + t') with f the torus map.
  m.mul = [field, kappa_pow, r](const Key& x, const Key& y) {
    const SuzukiPoint moved = suzuki_torus_action(field, kappa_pow[x[2]], {y[0], y[1]});
    const SuzukiPoint prod = suzuki_mul(field, {x[0], x[1]}, moved);
    return Key{prod.alpha, prod.beta, (x[2] + y[2]) % r};
  };
  m.label = suzuki_label;
  return close_under_generators(m, cap);
}

FiniteGroup build(const GroupSpec& spec, std::size_t cap);

FiniteGroup build_product(const Product& prod, std::size_t cap) {
  std::vector<FiniteGroup> factors;
  std::size_t predicted = 1;
  for (const auto& f : prod.factors) {
    factors.push_back(build(f, cap));
    predicted = saturating_mul(predicted, factors.back().order());
    require_within_cap(predicted, cap);
  }
  ElementModel m;
  m.identity.assign(factors.size(), 0);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (Elem g : factors[i].generators()) {
      Key k(factors.size(), 0);
      k[i] = g;
      m.generators.push_back(std::move(k));
    }
  }
  m.mul = [&factors](const Key& x, const Key& y) {
    Key r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = factors[i].mul(x[i], y[i]);
    return r;
  };
  m.label = [&factors](const Key& k) {
    std::string out = "<";
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) out += "|";
      out += factors[i].label(k[i]);
    }
    return out + ">";
  };
  return close_under_generators(m, cap);
}

Elem evaluate_word(const FiniteGroup& n, const Word& w) {
  Elem result = 0;
  const auto gens = n.generators();
  for (const auto& t : w.terms) {
    if (t.generator == 0 || t.generator > gens.size()) {
      throw InvalidAction("n" + std::to_string(t.generator) + " is not a generator of N");
    }
    result = n.mul(result, n.pow(gens[t.generator - 1], t.exponent));
  }
  return result;
}

/// Extends generator images to a map on the whole group, failing if the
/// images do not define a homomorphism.
std::vector<Elem> extend_to_homomorphism(const FiniteGroup& g, const std::vector<Elem>& images,
                                         const std::function<Elem(Elem, Elem)>& target_mul,
                                         const std::string& what) {
  constexpr auto unset = std::numeric_limits<Elem>::max();
  const auto gens = g.generators();
  std::vector<Elem> map(g.order(), unset);
  map[0] = 0;
  std::vector<Elem> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Elem e = queue[qi];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Elem x = g.mul(e, gens[j]);
      const Elem value = target_mul(map[e], images[j]);
      if (map[x] == unset) {
        map[x] = value;
        queue.push_back(x);
      } else if (map[x] != value) {
        throw InvalidAction(what);
      }
    }
  }
  return map;
}

FiniteGroup build_semidirect(const Semidirect& sd, std::size_t cap) {
  FiniteGroup n = build(sd.parts[0], cap);
  FiniteGroup h = build(sd.parts[1], cap);
  require_within_cap(saturating_mul(n.order(), h.order()), cap);
  const auto ngens = n.generators();
  const auto hgens = h.generators();

  // One automorphism of N per generator of H.
  std::vector<std::vector<Elem>> phi;
  for (std::size_t i = 0; i < hgens.size(); ++i) {
    std::vector<Elem> images(ngens.begin(), ngens.end());
    for (const auto& m : sd.action) {
      if (m.h_generator == i + 1) {
        if (m.images.size() != ngens.size()) {
          throw InvalidAction("h" + std::to_string(i + 1) + " lists " + std::to_string(m.images.size()) +
                              " images but N has " + std::to_string(ngens.size()) + " generators");
        }
        for (std::size_t j = 0; j < ngens.size(); ++j) images[j] = evaluate_word(n, m.images[j]);
      }
    }
    auto map = extend_to_homomorphism(
        n, images, [&n](Elem a, Elem b) { return n.mul(a, b); },
        "images for h" + std::to_string(i + 1) + " do not define an endomorphism of N");
    std::vector<char> hit(n.order());
    for (Elem v : map) hit[v] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
      throw InvalidAction("images for h" + std::to_string(i + 1) + " do not define an automorphism of N");
    }
    phi.push_back(std::move(map));
  }
  for (const auto& m : sd.action) {
    if (m.h_generator == 0 || m.h_generator > hgens.size()) {
      throw InvalidAction("h" + std::to_string(m.h_generator) + " is not a generator of H");
    }
  }

  // Right action of H on N: act[h*g_i] = phi_i after act[h].
  constexpr auto unset = std::numeric_limits<Elem>::max();
  const std::size_t nn = n.order();
  std::vector<Elem> act(h.order() * nn, unset);
  for (Elem x = 0; x < nn; ++x) act[x] = x;
  std::vector<Elem> queue{0};
  std::vector<char> seen(h.order());
  seen[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Elem e = queue[qi];
    for (std::size_t i = 0; i < hgens.size(); ++i) {
      const Elem y = h.mul(e, hgens[i]);
      for (Elem x = 0; x < nn; ++x) {
        const Elem value = phi[i][act[e * nn + x]];
        Elem& slot = act[static_cast<std::size_t>(y) * nn + x];
        if (!seen[y]) {
          slot = value;
        } else if (slot != value) {
          throw InvalidAction("generator automorphisms do not define an action of H");
        }
      }
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }

  ElementModel m;
  m.identity = {0, 0};  // {h, n} stands for h*n
  for (Elem g : ngens) m.generators.push_back({0, g});
  for (Elem g : hgens) m.generators.push_back({g, 0});
  m.mul = [&n, &h, &act, nn](const Key& x, const Key& y) {
    return Key{h.mul(x[0], y[0]), n.mul(act[static_cast<std::size_t>(y[0]) * nn + x[1]], y[1])};
  };
  m.label = [&n, &h](const Key& k) { return "[" + h.label(k[0]) + ";" + n.label(k[1]) + "]"; };
  return close_under_generators(m, cap);
}

FiniteGroup build(const GroupSpec& spec, std::size_t cap) {
  return std::visit(
      [cap](const auto& node) -> FiniteGroup {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Atom>) {
          switch (node.kind) {
            case AtomKind::cyclic: return build_cyclic(node.params[0], cap);
            case AtomKind::dihedral: return build_dihedral(node.params[0], cap);
            case AtomKind::symmetric: return build_symmetric(node.params[0], cap);
            case AtomKind::alternating: return build_alternating(node.params[0], cap);
            case AtomKind::quaternion: return build_quaternion(cap);
            case AtomKind::sl23: return build_sl23(cap);
            case AtomKind::agl: return build_agl(node.params[1], cap);
            case AtomKind::suzuki_p: return build_suzuki(node.params[0], 1, cap);
            case AtomKind::suzuki_borel: return build_suzuki(node.params[0], node.params[1], cap);
          }
          throw InvalidSpec("unknown atom");
        } else if constexpr (std::is_same_v<T, Product>) {
          return build_product(node, cap);
        } else if constexpr (std::is_same_v<T, Semidirect>) {
          return build_semidirect(node, cap);
        } else {
          return build_perm(node, cap);
        }
      },
      spec.node);
}

}  // namespace

FiniteGroup construct(const GroupSpec& spec, const ConstructOptions& options) {
  const std::size_t cap = std::min(options.max_order, FiniteGroup::kMaxOrder);
  FiniteGroup g = build(spec, cap);
  if (options.verify_axioms) verify_group_axioms(g);
  return g;
}

}  // namespace ncng
