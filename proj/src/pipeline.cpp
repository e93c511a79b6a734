#include "mordell/pipeline.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mordell {
namespace {

void require_parity(const BinaryCubicForm& f) {
  if ((f.a * f.d - f.b * f.c) % 2 != 0) {
    throw std::runtime_error(
        "forms_for_k: class violates ad = bc (mod 2) parity");
  }
}

struct Contribution {
  std::size_t class_idx;
  Int y_signed;  // the signed G1/2 value produced by this pair
};

SolverConfig explicit_cfg(const SolverConfig& base, const Int& y_bound) {
  SolverConfig cfg = base;
  cfg.bound_policy = BoundPolicy::explicit_bound;
  cfg.y_bound = y_bound;
  return cfg;
}

}  // namespace

std::vector<FormClass> forms_for_k(const Int& k) {
  if (k == 0) {
    throw std::invalid_argument("forms_for_k: k must be nonzero");
  }
  const Int absk = abs(k);
  const SearchWindow w{108 * absk - 1, 108 * absk};
  const Int d_target = -108 * k;

  std::vector<FormClass> out;
  const DiscSign sign = (k < 0) ? DiscSign::positive : DiscSign::negative;
  for (const ReducibleForm& f : enumerate_reducible(w, sign)) {
    FormClass fc = as_form_class(f);
    if (fc.disc != d_target) {
      throw std::runtime_error("forms_for_k: reducible discriminant mismatch");
    }
    require_parity(fc.form);
    out.push_back(std::move(fc));
  }

  const std::vector<FormClass> irr =
      (k < 0) ? enumerate_pos(w) : enumerate_neg(w);
  for (const FormClass& fc : irr) {
    if (fc.disc != d_target) {
      throw std::runtime_error(
          "forms_for_k: irreducible discriminant mismatch");
    }
    require_parity(fc.form);
    out.push_back(fc);
  }
  return out;
}

std::vector<MordellPoint> triple_to_point(const BinaryCubicForm& f,
                                          const ThueSolution& s) {
  if (evaluate(f, s.x, s.y) != 1) {
    throw std::invalid_argument("triple_to_point: f(x, y) != 1");
  }
  const Int d = discriminant(f);
  if (d % 108 != 0) {
    throw std::invalid_argument(
        "triple_to_point: discriminant not divisible by 108");
  }
  const Int k = -d / 108;
  const Int x_big = evaluate(hessian(f), s.x, s.y);
  const Int g = evaluate(covariant_g(f), s.x, s.y);
  if (g % 2 != 0) {
    throw std::runtime_error("triple_to_point: G1 value is odd");
  }
  const Int y_big = g / 2;
  if (y_big * y_big != x_big * x_big * x_big + k) {
    throw std::runtime_error("triple_to_point: curve equation failed");
  }
  std::vector<MordellPoint> pts;
  if (y_big == 0) {
    pts.push_back(MordellPoint{x_big, 0, k});
  } else {
    const Int y_abs = abs(y_big);
    pts.push_back(MordellPoint{x_big, Int(-y_abs), k});
    pts.push_back(MordellPoint{x_big, y_abs, k});
  }
  return pts;
}

BinaryCubicForm converse_form(const Int& X, const Int& Y) {
  return BinaryCubicForm{1, 0, Int(-X), Int(2 * Y)};
}

SolutionSet solve_classes(const Int& k, const std::vector<FormClass>& classes,
                          const SolverConfig& cfg) {
  if (k == 0) {
    throw std::invalid_argument("solve_classes: k must be nonzero");
  }
  const Int x_max = hall_x_max(k, cfg);

  SolutionSet out;
  out.k = k;
  out.complete_flag = true;

  std::map<std::pair<Int, Int>, std::vector<Contribution>> contrib;
  std::vector<MordellPoint> pts;

  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const FormClass& fc = classes[ci];
    std::vector<ThueSolution> sols;
    if (fc.kind == FormKind::reducible) {
      sols = solve_reducible(ReducibleForm{fc.form.b, fc.form.c});
    } else {
      const Int b_needed =
          (k < 0) ? default_bound(k, cfg, hessian(fc.form))
                  : default_bound(k, cfg);
      const Int yb = (cfg.bound_policy == BoundPolicy::explicit_bound)
                         ? cfg.y_bound
                         : b_needed;
      const bool provable = (k < 0) && yb >= b_needed;
      if (!provable) out.complete_flag = false;
      sols = solve_thue(fc.form, explicit_cfg(cfg, yb));
    }
    for (const ThueSolution& s : sols) {
      const std::vector<MordellPoint> mapped = triple_to_point(fc.form, s);
      const Int y_signed = evaluate(covariant_g(fc.form), s.x, s.y) / 2;
      const MordellPoint& rep = mapped.front();
      contrib[{rep.X, abs(rep.Y)}].push_back(Contribution{ci, y_signed});
      for (const MordellPoint& p : mapped) {
        if (p.k != k) {
          throw std::runtime_error("solve_classes: k mismatch in mapping");
        }
        if (p.X <= x_max) pts.push_back(p);
      }
    }
  }

  // Injectivity law: (class, solution) -> signed point is injective within
  // one k. So a (X, |Y|) key has at most two producers with opposite G1
  // signs; two producers sit either in one class (the paired solutions of a
  // single form) or in two reducible classes (a square-discriminant class
  // and its mirror are distinct canonical forms, one per sign). Distinct
  // irreducible classes never collide, and Y = 0 keys have one producer.
  for (const auto& [key, lst] : contrib) {
    if (lst.size() > 2) {
      throw std::runtime_error("solve_classes: more than two producers for X=" +
                               key.first.get_str());
    }
    if (key.second == 0 && lst.size() != 1) {
      throw std::runtime_error(
          "solve_classes: Y=0 point produced more than once at X=" +
          key.first.get_str());
    }
    if (lst.size() == 2) {
      if (lst[0].y_signed != -lst[1].y_signed) {
        throw std::runtime_error(
            "solve_classes: producers not sign-paired at X=" +
            key.first.get_str());
      }
      const bool both_reducible =
          classes[lst[0].class_idx].kind == FormKind::reducible &&
          classes[lst[1].class_idx].kind == FormKind::reducible;
      if (lst[0].class_idx != lst[1].class_idx && !both_reducible) {
        throw std::runtime_error(
            "solve_classes: distinct classes collide at X=" +
            key.first.get_str());
      }
    }
  }

  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  out.points = std::move(pts);
  return out;
}

SolutionSet solve_k(const Int& k, const SolverConfig& cfg) {
  return solve_classes(k, forms_for_k(k), cfg);
}

std::map<Int, std::vector<FormClass>> classes_in_window(
    const Int& k_lo, const Int& k_hi, const SearchWindow& w) {
  if (k_lo > k_hi) {
    throw std::invalid_argument("classes_in_window: empty range");
  }
  std::map<Int, std::vector<FormClass>> buckets;

  auto bucket = [&](const FormClass& fc) {
    if (fc.disc % 108 != 0) return;
    const Int k = -fc.disc / 108;
    if (k == 0 || k < k_lo || k > k_hi) return;
    require_parity(fc.form);
    buckets[k].push_back(fc);
  };

  // Negative k values arise from positive discriminants and vice versa.
  if (k_lo < 0) {
    enumerate_pos(w, bucket);
    for (const ReducibleForm& f :
         enumerate_reducible(w, DiscSign::positive)) {
      bucket(as_form_class(f));
    }
  }
  if (k_hi > 0) {
    enumerate_neg(w, bucket);
    for (const ReducibleForm& f :
         enumerate_reducible(w, DiscSign::negative)) {
      bucket(as_form_class(f));
    }
  }
  return buckets;
}

std::map<Int, SolutionSet> solve_range(const Int& k_lo, const Int& k_hi,
                                       const SolverConfig& cfg) {
  if (k_lo > k_hi) {
    throw std::invalid_argument("solve_range: empty range");
  }
  const Int max_abs = std::max(Int(abs(k_lo)), Int(abs(k_hi)));
  const Int k_total = 108 * max_abs;
  const Int chunk = 1000000;

  std::map<Int, std::vector<FormClass>> buckets;
  for (Int lo = 0; lo < k_total; lo += chunk) {
    const Int hi = std::min(Int(lo + chunk), k_total);
    auto part = classes_in_window(k_lo, k_hi, SearchWindow{lo, hi});
    for (auto& [k, classes] : part) {
      auto& dst = buckets[k];
      dst.insert(dst.end(), classes.begin(), classes.end());
    }
  }

  std::map<Int, SolutionSet> out;
  for (Int k = k_lo; k <= k_hi; ++k) {
    if (k == 0) continue;
    out.emplace(k, solve_classes(k, buckets[k], cfg));
  }
  return out;
}

}  // namespace mordell
