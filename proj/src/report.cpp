#include "nbts/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nbts/oracle.hpp"

namespace nbts {

namespace {

constexpr unsigned kSuiteSeed = 902181;
constexpr int kSuiteInstances = 120;

std::vector<Point> sorted_points(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  return points;
}

Point swapped(const Point& p) {
  NbtsPoint n;
  std::copy(p.coords.begin(), p.coords.end(), n.coords.begin());
  return swap_parties(n).to_point();
}

std::map<VertexLabel::Family, int> family_histogram(const NamedPolytope& polytope,
                                                    int* unlabeled) {
  std::map<VertexLabel::Family, int> counts;
  *unlabeled = 0;
  for (const auto& label : polytope.labels) {
    if (label.has_value()) {
      ++counts[label->family];
    } else {
      ++*unlabeled;
    }
  }
  return counts;
}

bool contains_inequality(const PolytopeH& h, const Inequality& ineq) {
  const Inequality canon = canonicalized(ineq);
  return std::find(h.inequalities.begin(), h.inequalities.end(), canon) != h.inequalities.end();
}

}  // namespace

ReproductionReport run_reproduction_suite() {
  ReproductionReport report;
  auto add = [&report](int id, std::string title, bool passed, std::string detail) {
    report.criteria.push_back({id, std::move(title), passed, std::move(detail)});
  };

  const NamedPolytope nbts = build({PolytopeId::Nbts, 0});
  const NamedPolytope alice = build({PolytopeId::AliceFirst, 0});
  const NamedPolytope bob = build({PolytopeId::BobFirst, 0});
  const NamedPolytope definite = build({PolytopeId::DefiniteGlobal, 0});

  // 1. Weak-NBTS polytope: 24 vertices (16 deterministic + 8 PR-like),
  //    dimension 8, and agreement with the generated-vertex route.
  {
    int unlabeled = 0;
    auto families = family_histogram(nbts, &unlabeled);
    const int deterministic = families[VertexLabel::Family::Deterministic] +
                              families[VertexLabel::Family::Gyni];
    const int pr_like = families[VertexLabel::Family::PrLike];

    PolytopeV generated;
    generated.ambient_dim = kNbtsDim;
    for (int alpha = 0; alpha < 2; ++alpha) {
      for (int beta = 0; beta < 2; ++beta) {
        for (int mu = 0; mu < 2; ++mu) {
          for (int nu = 0; nu < 2; ++nu) {
            generated.vertices.push_back(
                to_coords(deterministic_vertex(alpha, beta, mu, nu)).to_point());
          }
        }
      }
    }
    for (int gamma = 0; gamma < 2; ++gamma) {
      for (int delta = 0; delta < 2; ++delta) {
        for (int epsilon = 0; epsilon < 2; ++epsilon) {
          generated.vertices.push_back(to_coords(pr_like_vertex(gamma, delta, epsilon)).to_point());
        }
      }
    }
    const PolytopeV reduced = extremal_subset(generated);

    const bool passed = nbts.vertices.vertices.size() == 24 && deterministic == 16 &&
                        pr_like == 8 && unlabeled == 0 && nbts.dimension == 8 &&
                        reduced.vertices == sorted_points(nbts.vertices.vertices) &&
                        reduced.vertices.size() == 24;
    std::ostringstream detail;
    detail << nbts.vertices.vertices.size() << " vertices (" << deterministic
           << " deterministic, " << pr_like << " PR-like), dimension " << nbts.dimension
           << "; generated-vertex cross-check "
           << (reduced.vertices == sorted_points(nbts.vertices.vertices) ? "matches"
                                                                         : "mismatches");
    add(1, "weak-NBTS polytope: 24 vertices, dimension 8", passed, detail.str());
  }

  // 2. One-party-first polytopes: 20 vertices, dimension 7, swap symmetry.
  {
    const auto alice_sorted = sorted_points(alice.vertices.vertices);
    const auto bob_sorted = sorted_points(bob.vertices.vertices);
    std::vector<Point> alice_swapped;
    for (const auto& v : alice_sorted) alice_swapped.push_back(swapped(v));
    const bool swap_ok = sorted_points(alice_swapped) == bob_sorted;
    const bool passed = alice.vertices.vertices.size() == 20 &&
                        bob.vertices.vertices.size() == 20 && alice.dimension == 7 &&
                        bob.dimension == 7 && swap_ok;
    std::ostringstream detail;
    detail << "alice-first: " << alice.vertices.vertices.size() << " vertices, dimension "
           << alice.dimension << "; bob-first: " << bob.vertices.vertices.size()
           << " vertices, dimension " << bob.dimension << "; swap map "
           << (swap_ok ? "matches" : "mismatches");
    add(2, "alice-first/bob-first polytopes: 20 vertices each, dimension 7", passed,
        detail.str());
  }

  // 3. Definite-global polytope: 40-vertex union reduces to 22 = 12 + 8 + 2,
  //    dimension 8.
  {
    const std::size_t union_size =
        alice.vertices.vertices.size() + bob.vertices.vertices.size();
    int unlabeled = 0;
    auto families = family_histogram(definite, &unlabeled);
    const bool passed = union_size == 40 && definite.vertices.vertices.size() == 22 &&
                        families[VertexLabel::Family::Deterministic] == 12 &&
                        families[VertexLabel::Family::Gyni] == 0 &&
                        families[VertexLabel::Family::PrLike] == 8 &&
                        families[VertexLabel::Family::Linear] == 2 && unlabeled == 0 &&
                        definite.dimension == 8;
    std::ostringstream detail;
    detail << union_size << "-vertex union reduces to " << definite.vertices.vertices.size()
           << " (" << families[VertexLabel::Family::Deterministic] << " deterministic, "
           << families[VertexLabel::Family::PrLike] << " PR-like, "
           << families[VertexLabel::Family::Linear] << " linear), dimension "
           << definite.dimension;
    add(3, "definite-global polytope: 22 vertices (12+8+2), dimension 8", passed, detail.str());
  }

  // 4. Each GYNI box is weak-NBTS yet certified outside definite-global.
  {
    bool passed = true;
    std::ostringstream detail;
    for (int alpha = 0; alpha < 2; ++alpha) {
      for (int beta = 0; beta < 2; ++beta) {
        const Correlation box = gyni_vertex(alpha, beta);
        const Point p = to_coords(box).to_point();
        const HullMembership membership = is_in_hull(p, definite.vertices);
        const bool weak = nbts_check(box, TimeOrdering::Weak).passed;
        const bool verified =
            verify_certificate(membership.certificate, definite.vertices, p);
        passed = passed && weak && !membership.inside && verified;
        detail << "gyni-" << alpha << beta << ": " << (weak ? "weak-pass" : "WEAK-FAIL") << ", "
               << (membership.inside ? "INSIDE" : "outside") << ", certificate "
               << (verified ? "verifies" : "FAILS") << "; ";
      }
    }
    add(4, "GYNI boxes: weak-NBTS but certified outside definite-global", passed, detail.str());
  }

  // 5. The eight facet inequalities: present among the definite-global
  //    facets, saturated from both one-party-first polytopes, violated only
  //    by the GYNI boxes among the 24 NBTS vertices.
  {
    const std::vector<Inequality> novel = novel_inequalities();
    bool contained = true;
    bool saturation = true;
    for (const auto& ineq : novel) {
      contained = contained && contains_inequality(definite.facets, ineq);
      int alice_tight = 0;
      int bob_tight = 0;
      for (const auto& v : alice.vertices.vertices) {
        if (ineq.saturates(v)) ++alice_tight;
      }
      for (const auto& v : bob.vertices.vertices) {
        if (ineq.saturates(v)) ++bob_tight;
      }
      saturation = saturation && alice_tight > 0 && bob_tight > 0;
    }
    std::vector<std::string> violators;
    for (std::size_t i = 0; i < nbts.vertices.vertices.size(); ++i) {
      const Point& v = nbts.vertices.vertices[i];
      for (const auto& ineq : novel) {
        if (!ineq.satisfies(v)) {
          violators.push_back(nbts.labels[i] ? nbts.labels[i]->name() : "unlabeled");
          break;
        }
      }
    }
    std::sort(violators.begin(), violators.end());
    const std::vector<std::string> expected = {"gyni-00", "gyni-01", "gyni-10", "gyni-11"};
    const bool exclusivity = violators == expected;
    const bool passed = novel.size() == 8 && contained && saturation && exclusivity;
    std::ostringstream detail;
    detail << novel.size() << " inequalities, " << (contained ? "all" : "NOT all")
           << " among definite-global facets (" << definite.facets.inequalities.size()
           << " facets, " << definite.facets.equalities.size()
           << " equalities); saturation from both sides "
           << (saturation ? "holds" : "FAILS") << "; violators among NBTS vertices: ";
    for (const auto& v : violators) detail << v << " ";
    add(5, "novel facet inequalities: facets, saturation, GYNI exclusivity", passed,
        detail.str());
  }

  // 6. Set-q polytopes: 400 candidates reduce to 150 vertices of dimension 8
  //    for interior q; endpoints coincide with the one-party-first polytopes.
  {
    bool passed = true;
    std::ostringstream detail;
    for (const Rational& q :
         {Rational(1, 3), Rational(1, 2), Rational(3, 4)}) {
      const NamedPolytope setq = build(PolytopeName::set_q(q));
      const bool ok = setq.vertices.vertices.size() == 150 && setq.dimension == 8;
      passed = passed && ok;
      detail << "q=" << q << ": " << setq.vertices.vertices.size() << " vertices, dimension "
             << setq.dimension << "; ";
    }
    const NamedPolytope at_one = build(PolytopeName::set_q(1));
    const NamedPolytope at_zero = build(PolytopeName::set_q(0));
    const bool end_one =
        sorted_points(at_one.vertices.vertices) == sorted_points(alice.vertices.vertices);
    const bool end_zero =
        sorted_points(at_zero.vertices.vertices) == sorted_points(bob.vertices.vertices);
    passed = passed && end_one && end_zero;
    detail << "q=1 equals alice-first: " << (end_one ? "yes" : "NO")
           << "; q=0 equals bob-first: " << (end_zero ? "yes" : "NO");
    add(6, "set-q polytopes: 400 candidates -> 150 vertices, dimension 8", passed, detail.str());
  }

  // 7. q-dependent inequalities: facets of set-q for interior q; every GYNI
  //    box violates at least one for each q on the grid.
  {
    bool facet_ok = true;
    std::ostringstream detail;
    for (const Rational& q :
         {Rational(1, 3), Rational(1, 2), Rational(3, 4)}) {
      const NamedPolytope setq = build(PolytopeName::set_q(q));
      for (const auto& ineq : q_inequalities(q)) {
        if (!contains_inequality(setq.facets, ineq)) facet_ok = false;
      }
    }
    bool violation_ok = true;
    for (const Rational& q : {Rational(0), Rational(1, 4), Rational(1, 2),
                              Rational(3, 4), Rational(1)}) {
      const std::vector<Inequality> bounds = q_inequalities(q);
      for (int alpha = 0; alpha < 2; ++alpha) {
        for (int beta = 0; beta < 2; ++beta) {
          const Point p = to_coords(gyni_vertex(alpha, beta)).to_point();
          bool violates = false;
          for (const auto& ineq : bounds) {
            if (!ineq.satisfies(p)) violates = true;
          }
          violation_ok = violation_ok && violates;
        }
      }
    }
    detail << "all four q-dependent bounds are set-q facets for q in {1/3,1/2,3/4}: "
           << (facet_ok ? "yes" : "NO")
           << "; every GYNI box violates one for q in {0,1/4,1/2,3/4,1}: "
           << (violation_ok ? "yes" : "NO");
    add(7, "q-dependent inequalities: set-q facets, violated by GYNI for all q",
        facet_ok && violation_ok, detail.str());
  }

  // 8. The PR-like box passes every regime and sits inside both
  //    one-party-first polytopes.
  {
    const Correlation box = pr_box();
    bool regimes = true;
    for (TimeOrdering ordering : {TimeOrdering::Weak, TimeOrdering::AliceFirst,
                                  TimeOrdering::BobFirst, TimeOrdering::Simultaneous}) {
      regimes = regimes && nbts_check(box, ordering).passed;
    }
    const Point p = to_coords(box).to_point();
    const HullMembership in_alice = is_in_hull(p, alice.vertices);
    const HullMembership in_bob = is_in_hull(p, bob.vertices);
    const bool certified =
        in_alice.inside && in_bob.inside &&
        verify_certificate(in_alice.certificate, alice.vertices, p) &&
        verify_certificate(in_bob.certificate, bob.vertices, p);
    std::ostringstream detail;
    detail << "all four regimes " << (regimes ? "pass" : "FAIL")
           << "; inside alice-first: " << (in_alice.inside ? "yes" : "NO")
           << "; inside bob-first: " << (in_bob.inside ? "yes" : "NO");
    add(8, "PR box: passes every regime, inside both one-party-first polytopes",
        regimes && certified, detail.str());
  }

  // 9. Randomized geometry cross-checks.
  {
    const PropertySuiteResult suite = run_geometry_property_suite(kSuiteInstances, kSuiteSeed);
    std::ostringstream detail;
    detail << suite.instances << " instances, " << suite.checks << " checks, "
           << suite.failures.size() << " failures";
    for (std::size_t i = 0; i < suite.failures.size() && i < 5; ++i) {
      detail << "; " << suite.failures[i];
    }
    add(9, "geometry oracle suite: 120 randomized instances",
        suite.passed() && suite.instances >= 100, detail.str());
  }

  report.all_passed = true;
  for (const auto& c : report.criteria) report.all_passed = report.all_passed && c.passed;
  return report;
}

std::string render_report(const ReproductionReport& report) {
  std::ostringstream out;
  for (const auto& c : report.criteria) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << "\n"
        << "       " << c.detail << "\n";
  }
  out << (report.all_passed ? "all criteria passed" : "SOME CRITERIA FAILED") << "\n";
  return out.str();
}

}  // namespace nbts
