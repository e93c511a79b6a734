#include "mordell/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "mordell/forms.hpp"
#include "mordell/pipeline.hpp"

namespace mordell {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

std::string HallRecord::display() const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%ld.%02ld", measure_x100 / 100,
                measure_x100 % 100);
  return buf;
}

bool sixth_power_free(const Int& k) {
  if (k == 0) throw std::invalid_argument("k must be nonzero");
  Int n = abs_int(k);
  for (Int p = 2;; ++p) {
    Int p2 = p * p;
    Int p6 = p2 * p2 * p2;
    if (p6 > n) return true;
    if (n % p6 == 0) return false;
  }
}

Histogram histogram(const Results& results, HistogramFilter filter,
                    bool allow_incomplete) {
  Histogram h;
  h.filter = filter;
  if (results.empty()) {
    h.range_desc = "[]";
    return h;
  }
  h.range_desc = "[" + to_string(results.begin()->first) + ", " +
                 to_string(results.rbegin()->first) + "]";
  for (const auto& [k, s] : results) {
    if (!s.complete_flag) {
      if (!allow_incomplete) {
        throw std::invalid_argument(
            "incomplete result for k = " + to_string(k) +
            "; statistics over incomplete data must be requested explicitly");
      }
      h.includes_incomplete = true;
    }
    if (filter == HistogramFilter::sixth_power_free && !sixth_power_free(k)) {
      continue;
    }
    ++h.buckets[s.n_k()];
  }
  return h;
}

std::vector<HallRecord> hall_measures(const Results& results,
                                      const Rational& threshold) {
  if (threshold.den <= 0 || threshold.num < 0) {
    throw std::invalid_argument("threshold must be a non-negative rational");
  }
  Int p(threshold.num), q(threshold.den);
  std::vector<HallRecord> out;
  for (const auto& [k, s] : results) {
    Int ak = abs_int(k);
    const Int* last_x = nullptr;
    for (const auto& pt : s.points) {
      if (pt.X <= 0) continue;
      if (last_x != nullptr && *last_x == pt.X) continue;  // +-Y pairs
      last_x = &pt.X;
      // sqrt(X)/|k| > p/q  <=>  q^2 X > p^2 k^2, exactly.
      if (q * q * pt.X <= p * p * ak * ak) continue;
      // Round-half-up display: the largest n with (2n-1)|k| <= sqrt(40000 X).
      Int t = isqrt(40000 * pt.X);
      Int n = (t / ak + 1) / 2;
      out.push_back(HallRecord{k, pt.X, to_i64(n)});
    }
  }
  std::sort(out.begin(), out.end(), [](const HallRecord& a, const HallRecord& b) {
    Int lhs = a.X * b.k * b.k;
    Int rhs = b.X * a.k * a.k;
    if (lhs != rhs) return lhs > rhs;
    Int aa = abs_int(a.k), ab = abs_int(b.k);
    if (aa != ab) return aa < ab;
    if (a.k != b.k) return a.k < b.k;
    return a.X < b.X;
  });
  return out;
}

std::vector<LargeSolution> large_solutions(const Results& results,
                                           const Int& x_threshold) {
  std::vector<LargeSolution> out;
  for (const auto& [k, s] : results) {
    for (const auto& pt : s.points) {
      if (pt.X > x_threshold) out.push_back(LargeSolution{k, pt.X, pt.Y});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const LargeSolution& a, const LargeSolution& b) {
              if (a.X != b.X) return a.X > b.X;
              if (a.k != b.k) return a.k < b.k;
              return a.Y < b.Y;
            });
  return out;
}

std::string serialize_record(const SolutionSet& s) {
  std::string out = "{\"k\":" + to_string(s.k) +
                    ",\"n\":" + std::to_string(s.points.size()) +
                    ",\"complete\":" + (s.complete_flag ? "true" : "false") +
                    ",\"points\":[";
  bool first = true;
  for (const auto& p : s.points) {
    if (!first) out += ',';
    first = false;
    out += '[' + to_string(p.X) + ',' + to_string(p.Y) + ']';
  }
  out += "]}";
  return out;
}

void serialize(const Results& results, OutputFormat format, std::ostream& os) {
  if (format == OutputFormat::json_lines) {
    for (const auto& [k, s] : results) os << serialize_record(s) << '\n';
    return;
  }
  os << "k,X,Y,complete\n";
  for (const auto& [k, s] : results) {
    for (const auto& p : s.points) {
      os << to_string(k) << ',' << to_string(p.X) << ',' << to_string(p.Y)
         << ',' << (s.complete_flag ? "true" : "false") << '\n';
    }
  }
}

namespace {

struct LineScanner {
  const std::string& s;
  long lineno;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
  }
  void ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  void expect(char c) {
    ws();
    if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  }
  bool accept(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string key() {
    expect('"');
    auto j = s.find('"', i);
    if (j == std::string::npos) fail("unterminated key");
    std::string k = s.substr(i, j - i);
    i = j + 1;
    expect(':');
    return k;
  }
  Int integer() {
    ws();
    std::size_t j = i;
    if (j < s.size() && s[j] == '-') ++j;
    std::size_t d0 = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == d0) fail("expected integer");
    Int v(s.substr(i, j - i));
    i = j;
    return v;
  }
  bool boolean() {
    ws();
    if (s.compare(i, 4, "true") == 0) {
      i += 4;
      return true;
    }
    if (s.compare(i, 5, "false") == 0) {
      i += 5;
      return false;
    }
    fail("expected true or false");
  }
  void end() {
    ws();
    if (i != s.size()) fail("trailing characters");
  }
};

SolutionSet parse_record(const std::string& line, long lineno) {
  LineScanner sc{line, lineno};
  SolutionSet rec;
  Int declared_n = -1;
  bool saw_k = false, saw_n = false, saw_complete = false, saw_points = false;
  sc.expect('{');
  for (int field = 0; field < 4; ++field) {
    if (field > 0) sc.expect(',');
    std::string key = sc.key();
    if (key == "k" && !saw_k) {
      rec.k = sc.integer();
      saw_k = true;
    } else if (key == "n" && !saw_n) {
      declared_n = sc.integer();
      saw_n = true;
    } else if (key == "complete" && !saw_complete) {
      rec.complete_flag = sc.boolean();
      saw_complete = true;
    } else if (key == "points" && !saw_points) {
      sc.expect('[');
      if (!sc.accept(']')) {
        do {
          sc.expect('[');
          Int X = sc.integer();
          sc.expect(',');
          Int Y = sc.integer();
          sc.expect(']');
          rec.points.push_back(MordellPoint{X, Y, Int(0)});
        } while (sc.accept(','));
        sc.expect(']');
      }
      saw_points = true;
    } else {
      sc.fail("unexpected key \"" + key + "\"");
    }
  }
  sc.expect('}');
  sc.end();
  if (rec.k == 0) sc.fail("k must be nonzero");
  if (declared_n < 0 || declared_n != Int(rec.points.size())) {
    sc.fail("declared n disagrees with point list for k = " + to_string(rec.k));
  }
  for (auto& p : rec.points) p.k = rec.k;
  return rec;
}

}  // namespace

Results parse_json_lines(std::istream& is) {
  Results out;
  std::string line;
  long lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    SolutionSet rec = parse_record(line, lineno);
    if (!out.emplace(rec.k, rec).second) {
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": duplicate record for k = " +
                               to_string(rec.k));
    }
  }
  return out;
}

Results parse_csv(std::istream& is) {
  Results out;
  std::string line;
  long lineno = 0;
  if (!std::getline(is, line) || line != "k,X,Y,complete") {
    throw std::runtime_error("line 1: expected header k,X,Y,complete");
  }
  lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      auto comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    auto fail = [&](const std::string& msg) -> void {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
    };
    if (cells.size() != 4) fail("expected 4 fields");
    auto as_int = [&](const std::string& cell) {
      std::size_t j = cell.empty() || cell[0] != '-' ? 0 : 1;
      if (j == cell.size() ||
          cell.find_first_not_of("0123456789", j) != std::string::npos) {
        fail("expected integer, got \"" + cell + "\"");
      }
      return Int(cell);
    };
    Int k = as_int(cells[0]);
    if (k == 0) fail("k must be nonzero");
    MordellPoint p{as_int(cells[1]), as_int(cells[2]), k};
    bool complete;
    if (cells[3] == "true") {
      complete = true;
    } else if (cells[3] == "false") {
      complete = false;
    } else {
      fail("expected true or false, got \"" + cells[3] + "\"");
    }
    auto [it, inserted] = out.try_emplace(k);
    if (inserted) {
      it->second.k = k;
      it->second.complete_flag = complete;
    } else if (it->second.complete_flag != complete) {
      fail("conflicting complete flags for k = " + to_string(k));
    }
    it->second.points.push_back(p);
  }
  return out;
}

std::vector<VerifyIssue> verify_results(const Results& results) {
  std::vector<VerifyIssue> issues;
  for (const auto& [k, s] : results) {
    auto flag = [&, k = k](const std::string& msg) {
      issues.push_back(VerifyIssue{k, msg});
    };
    if (s.k != k) {
      flag("record key disagrees with stored k = " + to_string(s.k));
      continue;
    }
    for (std::size_t idx = 0; idx < s.points.size(); ++idx) {
      const MordellPoint& p = s.points[idx];
      if (p.k != k) {
        flag("point carries wrong k");
        continue;
      }
      if (idx > 0 && !(s.points[idx - 1] < p)) {
        flag("points not strictly increasing at X = " + to_string(p.X));
      }
      if (p.Y * p.Y != p.X * p.X * p.X + k) {
        flag("curve equation fails at (" + to_string(p.X) + ", " +
             to_string(p.Y) + ")");
        continue;
      }
      BinaryCubicForm f = converse_form(p.X, p.Y);
      if (!syzygy_holds(f, Int(1), Int(0))) {
        flag("converse form fails syzygy at X = " + to_string(p.X));
        continue;
      }
      auto back = triple_to_point(f, ThueSolution{Int(1), Int(0)});
      bool recovered = false;
      for (const auto& q : back) {
        if (q.X == p.X && q.Y == p.Y && q.k == k) recovered = true;
      }
      if (!recovered) {
        flag("converse form does not recover (" + to_string(p.X) + ", " +
             to_string(p.Y) + ")");
      }
    }
  }
  return issues;
}

}  // namespace mordell
