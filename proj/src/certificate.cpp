#include "sigcolor/certificate.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "sigcolor/error.hpp"

namespace sigcolor {

using json = nlohmann::json;

bool ColorClass::contains(std::string_view v) const {
  return std::find(members.begin(), members.end(), v) != members.end();
}

std::int64_t Certificate::colors_used() const {
  std::int64_t total = 0;
  for (const auto& c : classes) total += c.rep;
  return total;
}

Certificate merge_duplicate_classes(const Certificate& c) {
  Certificate out{c.p, c.q, c.mode, {}};
  std::map<std::vector<std::string>, std::size_t> seen;
  for (ColorClass cls : c.classes) {
    std::sort(cls.members.begin(), cls.members.end());
    auto [it, fresh] = seen.emplace(cls.members, out.classes.size());
    if (fresh) {
      out.classes.push_back(std::move(cls));
    } else {
      out.classes[it->second].rep += cls.rep;
    }
  }
  return out;
}

Certificate parse_certificate(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("certificate must be a JSON object");
  for (const char* key : {"p", "q"}) {
    if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<std::int64_t>() <= 0) {
      throw ParseError(std::string("certificate needs a positive integer \"") + key + "\"");
    }
  }
  Certificate c;
  c.p = doc["p"].get<std::int64_t>();
  c.q = doc["q"].get<std::int64_t>();
  const std::string mode = doc.value("mode", std::string("balanced"));
  if (mode == "balanced") {
    c.mode = CertificateMode::kBalanced;
  } else if (mode == "forest") {
    c.mode = CertificateMode::kForest;
  } else {
    throw ParseError("unknown certificate mode '" + mode + "'");
  }
  if (!doc.contains("classes") || !doc["classes"].is_array()) {
    throw ParseError("certificate needs a \"classes\" array");
  }
  for (const auto& cls : doc["classes"]) {
    if (!cls.is_object() || !cls.contains("set") || !cls["set"].is_array() ||
        !cls.contains("rep") || !cls["rep"].is_number_integer()) {
      throw ParseError("class needs a \"set\" array and an integer \"rep\"");
    }
    ColorClass out;
    for (const auto& v : cls["set"]) {
      if (!v.is_string()) throw ParseError("class members must be strings");
      out.members.push_back(v.get<std::string>());
    }
    std::set<std::string> unique(out.members.begin(), out.members.end());
    if (unique.size() != out.members.size()) throw ParseError("class lists a vertex twice");
    out.rep = cls["rep"].get<std::int64_t>();
    c.classes.push_back(std::move(out));
  }
  return merge_duplicate_classes(c);
}

std::string serialize_certificate(const Certificate& c) {
  json doc;
  doc["p"] = c.p;
  doc["q"] = c.q;
  doc["mode"] = c.mode == CertificateMode::kBalanced ? "balanced" : "forest";
  doc["classes"] = json::array();
  for (const auto& cls : c.classes) {
    doc["classes"].push_back({{"set", cls.members}, {"rep", cls.rep}});
  }
  return doc.dump();
}

const char* to_string(Finding::Kind kind) {
  switch (kind) {
    case Finding::Kind::kUnknownVertex: return "unknown_vertex";
    case Finding::Kind::kEmptyClass: return "empty_class";
    case Finding::Kind::kNonPositiveRep: return "non_positive_rep";
    case Finding::Kind::kUnbalancedClass: return "unbalanced_class";
    case Finding::Kind::kCyclicClass: return "cyclic_class";
    case Finding::Kind::kPaletteOverflow: return "palette_overflow";
    case Finding::Kind::kUndercovered: return "undercovered";
  }
  return "unknown";
}

std::int64_t VerifyReport::coverage_of(std::string_view v) const {
  for (const auto& [name, count] : coverage) {
    if (name == v) return count;
  }
  return 0;
}

VerifyReport verify(const SignedGraph& g, const Certificate& c) {
  VerifyReport report;
  std::vector<std::int64_t> coverage(g.vertex_count(), 0);

  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const ColorClass& cls = c.classes[i];
    const std::string label = "class " + std::to_string(i);
    if (cls.members.empty()) {
      report.violations.push_back({Finding::Kind::kEmptyClass, label + " is empty", i, {}});
    }
    if (cls.rep <= 0) {
      report.violations.push_back(
          {Finding::Kind::kNonPositiveRep, label + " has non-positive rep", i, {}});
    }
    std::vector<VertexId> ids;
    bool known = true;
    for (const auto& name : cls.members) {
      if (auto v = g.find(name)) {
        ids.push_back(*v);
      } else {
        known = false;
        report.violations.push_back({Finding::Kind::kUnknownVertex,
                                     label + " names unknown vertex '" + name + "'", i, {}});
      }
    }
    if (!known) continue;
    const VertexSet set(ids);
    for (VertexId v : set) coverage[v] += cls.rep;

    std::optional<std::vector<VertexId>> cycle;
    Finding::Kind kind{};
    if (c.mode == CertificateMode::kBalanced) {
      if (auto w = negative_cycle_witness(g, set)) cycle = std::move(w->vertices);
      kind = Finding::Kind::kUnbalancedClass;
    } else {
      cycle = find_cycle(g, set);
      kind = Finding::Kind::kCyclicClass;
    }
    if (cycle) {
      Finding f{kind,
                label + (c.mode == CertificateMode::kBalanced ? " induces a negative cycle"
                                                              : " induces a cycle"),
                i,
                {}};
      for (VertexId v : *cycle) f.cycle.push_back(g.name(v));
      report.violations.push_back(std::move(f));
    }
  }

  report.colors_used = c.colors_used();
  if (report.colors_used > c.p) {
    report.violations.push_back({Finding::Kind::kPaletteOverflow,
                                 "classes use " + std::to_string(report.colors_used) +
                                     " colors but the palette has " + std::to_string(c.p),
                                 std::nullopt,
                                 {}});
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    report.coverage.emplace_back(g.name(v), coverage[v]);
    if (coverage[v] < c.q) {
      report.violations.push_back({Finding::Kind::kUndercovered,
                                   "vertex '" + g.name(v) + "' has " +
                                       std::to_string(coverage[v]) + " colors, needs " +
                                       std::to_string(c.q),
                                   std::nullopt,
                                   {}});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

std::int64_t overlap(const Certificate& c, std::string_view x, std::string_view y) {
  std::int64_t total = 0;
  for (const auto& cls : c.classes) {
    if (cls.contains(x) && cls.contains(y)) total += cls.rep;
  }
  return total;
}

std::int64_t triangle_missing_count(const Certificate& c, const std::array<std::string, 3>& t) {
  std::int64_t missing = c.p - c.colors_used();
  for (const auto& cls : c.classes) {
    if (!cls.contains(t[0]) && !cls.contains(t[1]) && !cls.contains(t[2])) missing += cls.rep;
  }
  return missing;
}

std::int64_t triangle_full_count(const Certificate& c, const std::array<std::string, 3>& t) {
  std::int64_t full = 0;
  for (const auto& cls : c.classes) {
    if (cls.contains(t[0]) && cls.contains(t[1]) && cls.contains(t[2])) full += cls.rep;
  }
  return full;
}

bool triangle_property_audit(const Certificate& c, const std::array<std::string, 3>& t,
                             int sign, std::int64_t threshold) {
  if (sign == kNegative) return triangle_missing_count(c, t) <= threshold;
  return triangle_full_count(c, t) <= threshold;
}

OverlapProfile profile(const Certificate& c, std::span<const std::string> terminals) {
  OverlapProfile out;
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    out.singles[terminals[i]] = 0;
    for (std::size_t j = i + 1; j < terminals.size(); ++j) {
      out.pairs[{terminals[i], terminals[j]}] = overlap(c, terminals[i], terminals[j]);
    }
  }
  for (const auto& cls : c.classes) {
    const std::string* only = nullptr;
    int hits = 0;
    for (const auto& t : terminals) {
      if (cls.contains(t)) {
        ++hits;
        only = &t;
      }
    }
    if (hits == 1) out.singles[*only] += cls.rep;
  }
  return out;
}

Certificate lp_to_certificate(const SignedGraph& g, const LpResult& r, CertificateMode mode) {
  Integer q = 1;
  for (const auto& ws : r.primal) {
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), ws.weight.get_den_mpz_t());
  }
  if (!q.fits_slong_p()) throw std::overflow_error("certificate: q does not fit in 64 bits");
  Certificate c;
  c.q = q.get_si();
  c.mode = mode;
  for (const auto& ws : r.primal) {
    const Rational scaled = ws.weight * Rational(q);
    if (scaled == 0) continue;
    ColorClass cls;
    for (VertexId v : ws.set) cls.members.push_back(g.name(v));
    cls.rep = scaled.get_num().get_si();
    c.p += cls.rep;
    c.classes.push_back(std::move(cls));
  }
  return merge_duplicate_classes(c);
}

}  // namespace sigcolor
