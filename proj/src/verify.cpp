#include "szm/verify.hpp"

#include "szm/catalog.hpp"
#include "szm/enumeration.hpp"
#include "szm/field.hpp"
#include "szm/moebius.hpp"
#include "szm/oracle.hpp"
#include "szm/perm_group.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

namespace szm {

namespace {

using Clock = std::chrono::steady_clock;

std::string str(BigInt const& x) { return x.str(); }
std::string str(std::uint64_t x) { return std::to_string(x); }
std::string str(std::string s) { return s; }
std::string str(char const* s) { return s; }

std::string str(std::map<std::uint64_t, BigInt> const& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto const& [k, v] : m) {
    os << (first ? "" : ", ") << k << ": " << v;
    first = false;
  }
  os << '}';
  return os.str();
}

class Runner {
 public:
  explicit Runner(Report& report) : report_(report) {}

  // Times fn, which returns {expected, actual}, and records the comparison.
  template <class Fn>
  void check(std::string name, Fn fn) {
    auto const t0 = Clock::now();
    auto [expected, actual] = fn();
    double const ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    bool const pass = expected == actual;
    report_.checks.push_back(
        Check{std::move(name), str(expected), str(actual), pass, ms});
  }

 private:
  Report& report_;
};

// Shared explicit objects, built once per run_suite call.
struct Context {
  unsigned e;
  VerifyOptions options;
  std::unique_ptr<Oracle> oracle;
  std::unique_ptr<ExplicitGroup> small;

  ExplicitGroup const& group() {
    if (e == 3) {
      return oracle_ref().group();
    }
    if (!small) {
      small = std::make_unique<ExplicitGroup>(e);
    }
    return *small;
  }
  Oracle& oracle_ref() {
    if (!oracle) {
      oracle = std::make_unique<Oracle>();
    }
    return *oracle;
  }
};

void field_suite(Context& ctx, Runner& run) {
  Field const& k = Field::get(ctx.e);
  std::uint64_t const q = k.size();
  run.check("field.inverse", [&] {
    std::uint64_t ok = 0;
    for (std::uint64_t x = 1; x < q; ++x) {
      auto const r = static_cast<Field::Raw>(x);
      ok += k.mul(r, k.inv(r)) == 1 ? 1 : 0;
    }
    return std::pair{q - 1, ok};
  });
  run.check("field.theta_squared_is_frobenius", [&] {
    std::uint64_t ok = 0;
    for (std::uint64_t x = 0; x < q; ++x) {
      auto const r = static_cast<Field::Raw>(x);
      ok += k.theta(k.theta(r)) == k.square(r) ? 1 : 0;
    }
    return std::pair{q, ok};
  });
  run.check("field.theta_multiplicative", [&] {
    std::uint64_t ok = 0;
    for (std::uint64_t x = 0; x < q; ++x) {
      for (std::uint64_t y = 0; y < q; ++y) {
        auto const a = static_cast<Field::Raw>(x);
        auto const b = static_cast<Field::Raw>(y);
        ok += k.theta(k.mul(a, b)) == k.mul(k.theta(a), k.theta(b)) ? 1 : 0;
      }
    }
    return std::pair{q * q, ok};
  });
  run.check("field.primitive_order", [&] {
    Field::Raw const w = k.subfield_primitive(ctx.e);
    std::uint64_t n = 1;
    for (Field::Raw x = w; x != 1; x = k.mul(x, w)) {
      ++n;
    }
    return std::pair{q - 1, n};
  });
  for (auto f : divisors(ctx.e)) {
    run.check("field.subfield_size(f=" + std::to_string(f) + ")", [&] {
      std::uint64_t n = 0;
      std::uint64_t phi_ok = 0;
      for (std::uint64_t x = 0; x < q; ++x) {
        auto const r = static_cast<Field::Raw>(x);
        bool const in = k.in_subfield(r, static_cast<unsigned>(f));
        n += in ? 1 : 0;
        phi_ok += k.in_subfield(k.phi(r), static_cast<unsigned>(f)) == in ? 1 : 0;
      }
      return std::pair{std::to_string(std::uint64_t{1} << f) + "/" + std::to_string(q),
                       std::to_string(n) + "/" + std::to_string(phi_ok)};
    });
  }
}

std::vector<Perm> perms_of(SuzukiGroup const& g, std::vector<GroupElement> const& xs) {
  std::vector<Perm> out;
  for (auto const& x : xs) {
    out.push_back(g.perm(x));
  }
  return out;
}

void group_suite_large(Context& ctx, Runner& run) {
  SubgroupBuilder const b(ctx.e);
  SuzukiGroup const& g = b.group();
  PermGroup const full(g.degree(), perms_of(g, g.generators()));
  run.check("group.order", [&] { return std::pair{suzuki_order(ctx.e), full.order()}; });
  run.check("group.two_transitive", [&] {
    auto const sizes = full.basic_orbit_sizes();
    std::uint64_t const second = sizes.size() > 1 ? sizes[1] : 0;
    return std::pair{str(g.degree()) + "," + str(g.degree() - 1),
                     str(std::uint64_t{sizes[0]}) + "," + str(second)};
  });
  for (Kind kind : {Kind::F, Kind::Q, Kind::B0, Kind::B1, Kind::B2}) {
    ClassLabel const label{kind, ctx.e};
    run.check("group.subgroup_order(" + to_string(label) + ")", [&] {
      auto const inst = b.construct(label);
      bool inside = true;
      for (auto const& p : inst.perm_group.generators()) {
        inside = inside && full.contains(p);
      }
      return std::pair{str(subgroup_order(label)) + " inside",
                       str(inst.perm_group.order()) + (inside ? " inside" : " outside")};
    });
  }
}

void group_suite(Context& ctx, Runner& run) {
  if (ctx.e == 5) {
    group_suite_large(ctx, run);
    return;
  }
  ExplicitGroup const& eg = ctx.group();
  SuzukiGroup const& g = eg.group();
  std::uint64_t const q = g.q();
  run.check("group.bruhat_forms_distinct", [&] {
    std::set<std::vector<Perm::Point>> seen;
    std::uint64_t in_f = 0;
    for (ElementIndex i = 0; i < eg.size(); ++i) {
      auto const p = eg.perm(i);
      seen.emplace(p.images().begin(), p.images().end());
      in_f += g.unrank(i).in_f() ? 1 : 0;
    }
    return std::pair{str(g.order()) + "/" + str(g.f_size()),
                     str(std::uint64_t{seen.size()}) + "/" + str(in_f)};
  });
  run.check("group.schreier_sims_order", [&] {
    return std::pair{BigInt(g.order()),
                     PermGroup(g.degree(), perms_of(g, g.generators())).order()};
  });
  run.check("group.two_transitive", [&] {
    std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (ElementIndex i = 0; i < eg.size(); ++i) {
      pairs.emplace(eg.image(i, 0), eg.image(i, 1));
    }
    return std::pair{g.degree() * (g.degree() - 1), std::uint64_t{pairs.size()}};
  });
  run.check("group.q_regular", [&] {
    std::set<std::uint32_t> orbit;
    for (std::uint64_t a = 0; a < q; ++a) {
      for (std::uint64_t c = 0; c < q; ++c) {
        auto const x = g.q_element(static_cast<Field::Raw>(a), static_cast<Field::Raw>(c));
        orbit.insert(g.act(x, omega_point).index);
      }
    }
    return std::pair{q * q, std::uint64_t{orbit.size()} - orbit.count(0)};
  });
  run.check("group.three_point_stabiliser_trivial", [&] {
    std::uint64_t worst = 0;
    for (ElementIndex i = 0; i < eg.size(); ++i) {
      if (i == eg.identity()) {
        continue;
      }
      std::uint64_t fixed = 0;
      for (std::uint32_t x = 0; x < eg.degree(); ++x) {
        fixed += eg.image(i, x) == x ? 1 : 0;
      }
      worst = std::max(worst, fixed);
    }
    return std::pair{std::string("<= 2"), worst <= 2 ? std::string("<= 2") : str(worst)};
  });
  run.check("group.order_census", [&] {
    std::map<std::uint64_t, BigInt> actual;
    for (ElementIndex i = 0; i < eg.size(); ++i) {
      actual[eg.order(i)] += 1;
    }
    std::map<std::uint64_t, BigInt> expected;
    if (ctx.e == 1) {
      expected = {{1, 1}, {2, 5}, {4, 10}, {5, 4}};
    } else {
      expected = census(ClassLabel{Kind::G, 3}, 3).counts;
    }
    return std::pair{str(expected), str(actual)};
  });
  if (ctx.e != 3) {
    return;
  }
  run.check("group.semiregular_outside_subfield_points", [&] {
    SubgroupBuilder const& b = ctx.oracle_ref().builder();
    auto const g1 = eg.subgroup(b.construct(ClassLabel{Kind::G, 1}));
    std::uint64_t bad = 0;
    for (ElementIndex x : g1.elements) {
      if (x == eg.identity()) {
        continue;
      }
      for (std::uint32_t p = 0; p < eg.degree(); ++p) {
        if (!g.point_in_subfield(OvoidPoint{p}, 1) && eg.image(x, p) == p) {
          ++bad;
        }
      }
    }
    return std::pair{str(std::uint64_t{20}) + " elements, 0 fixed",
                     str(std::uint64_t{g1.size()}) + " elements, " + str(bad) + " fixed"};
  });
  run.check("group.single_involution_class", [&] {
    ElementIndex const z = eg.index(g.q_element(0, 1));
    std::set<ElementIndex> cls;
    std::uint64_t involutions = 0;
    for (ElementIndex i = 0; i < eg.size(); ++i) {
      cls.insert(eg.conj(z, i));
      involutions += eg.order(i) == 2 ? 1 : 0;
    }
    return std::pair{involutions, std::uint64_t{cls.size()}};
  });
  run.check("group.order4_not_conjugate_to_inverse", [&] {
    ElementIndex const y = eg.index(g.q_element(1, 0));
    ElementIndex const y_inv = eg.inv(y);
    std::uint64_t hits = 0;
    std::set<ElementIndex> cls;
    for (ElementIndex i = 0; i < eg.size(); ++i) {
      ElementIndex const c = eg.conj(y, i);
      cls.insert(c);
      hits += c == y_inv ? 1 : 0;
    }
    return std::pair{"0 conjugators, class 1820",
                     str(hits) + " conjugators, class " + str(std::uint64_t{cls.size()})};
  });
}

void normalizers_suite(Context& ctx, Runner& run) {
  Oracle& o = ctx.oracle_ref();
  for (auto const& label : canonical_classes(3)) {
    run.check("normalizer(" + to_string(label) + ")", [&] {
      auto const& rep = o.representative(label);
      return std::pair{normalizer_order(label, 3),
                       BigInt(o.group().normalizer(rep).size())};
    });
    run.check("class_size(" + to_string(label) + ")", [&] {
      return std::pair{class_size(label, 3), BigInt(o.class_members(label).size())};
    });
  }
}

void ncounts_suite(Context& ctx, Runner& run) {
  Oracle& o = ctx.oracle_ref();
  auto const classes = canonical_classes(3);
  for (auto const& h : classes) {
    for (auto const& k : classes) {
      BigInt const formula = n_count(h, k, 3);
      std::uint64_t const counted = o.count_containing(o.representative(h), k);
      if (formula == 0 && counted == 0) {
        continue;
      }
      std::string const pair = to_string(h) + ";" + to_string(k);
      run.check("N(" + pair + ")", [&] { return std::pair{formula, BigInt(counted)}; });
      run.check("double_count(" + pair + ")", [&] {
        BigInt const m = o.count_contained(h, k);
        return std::pair{formula * class_size(h, 3), m * class_size(k, 3)};
      });
    }
  }
}

void mobius_suite(Context& ctx, Runner& run, Report& report) {
  auto const table = mu_table(3);
  for (auto const& label : canonical_classes(3)) {
    run.check("mu(" + to_string(label) + ")",
              [&] { return std::pair{closed_form_mu(label, 3), table[label]}; });
  }
  for (auto const& row : ctx.oracle_ref().verify_eq2(table)) {
    run.check("eq2(" + to_string(row.h) + ")",
              [&] { return std::pair{row.expected, row.sum}; });
  }
  report.notes.push_back(
      "eq2 sums run over the canonical classes only; subgroups outside them "
      "are taken to have mu = 0 and are not enumerated");
}

void census_suite(Context& ctx, Runner& run) {
  Oracle& o = ctx.oracle_ref();
  ExplicitGroup const& eg = o.group();
  for (auto const& label : canonical_classes(3)) {
    run.check("census(" + to_string(label) + ")", [&] {
      std::map<std::uint64_t, BigInt> actual;
      for (ElementIndex x : o.representative(label).elements) {
        actual[eg.order(x)] += 1;
      }
      return std::pair{str(census(label, 3).counts), str(actual)};
    });
  }
}

void pairs_suite(Context& ctx, Runner& run, Report& report) {
  Oracle& o = ctx.oracle_ref();
  BigInt const aut = BigInt(3) * o.group().size();
  struct Case {
    unsigned k;
    BigInt (*closed)(unsigned);
  };
  for (Case const c : {Case{4, closed_form_h4}, Case{5, closed_form_h5},
                       Case{7, closed_form_h7}}) {
    std::string const name = "hecke:" + std::to_string(c.k);
    BigInt census_value;
    run.check("pairs(" + name + ").census", [&] {
      census_value = o.pair_census(c.k, ctx.options.jobs) / aut;
      return std::pair{c.closed(3), census_value};
    });
    run.check("pairs(" + name + ").n_gamma", [&] {
      return std::pair{c.closed(3), n_gamma(GammaDescriptor{
                                          GammaDescriptor::Variant::HeckeSmooth, c.k},
                                      3)};
    });
  }
  if (ctx.options.opt_in_slow) {
    run.check("pairs(hecke:4).census_unoptimized", [&] {
      return std::pair{closed_form_h4(3),
                       o.pair_census_unoptimized(4, ctx.options.jobs) / aut};
    });
  } else {
    report.notes.push_back("unoptimized hecke:4 census skipped (needs --opt-in-slow)");
  }
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](Check const& c) { return c.pass; });
}

std::vector<std::string> const& suite_names() {
  static std::vector<std::string> const names{
      "field", "group", "normalizers", "ncounts", "mobius", "census", "pairs"};
  return names;
}

bool suite_supported(std::string_view suite, unsigned e) {
  bool const known = suite == "all" || std::find(suite_names().begin(),
                                                 suite_names().end(),
                                                 suite) != suite_names().end();
  if (!known) {
    return false;
  }
  if (e == 3) {
    return true;
  }
  return (e == 1 || e == 5) && (suite == "field" || suite == "group" || suite == "all");
}

Report run_suite(std::string_view suite, unsigned e, VerifyOptions const& options) {
  if (!suite_supported(suite, e)) {
    throw std::invalid_argument("suite '" + std::string(suite) +
                                "' is not available for e = " + std::to_string(e));
  }
  Report report{e, std::string(suite), {}, {}};
  Context ctx{e, options, nullptr, nullptr};
  Runner run(report);
  for (auto const& name : suite_names()) {
    if ((suite != "all" && suite != name) || !suite_supported(name, e)) {
      continue;
    }
    if (name == "field") {
      field_suite(ctx, run);
    } else if (name == "group") {
      group_suite(ctx, run);
    } else if (name == "normalizers") {
      normalizers_suite(ctx, run);
    } else if (name == "ncounts") {
      ncounts_suite(ctx, run);
    } else if (name == "mobius") {
      mobius_suite(ctx, run, report);
    } else if (name == "census") {
      census_suite(ctx, run);
    } else if (name == "pairs") {
      pairs_suite(ctx, run, report);
    }
  }
  return report;
}

}  // namespace szm
