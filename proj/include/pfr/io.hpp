#pragma once

#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfr/builtins.hpp"
#include "pfr/completion.hpp"
#include "pfr/enumerate.hpp"
#include "pfr/error.hpp"
#include "pfr/frame.hpp"
#include "pfr/realfn.hpp"
#include "pfr/space.hpp"
#include "pfr/spatial.hpp"
#include "pfr/sublocale.hpp"

namespace pfr {

using json = nlohmann::ordered_json;

inline json error_to_json(const Error& e) {
  return json{{"error", name_of(e.kind())}, {"message", e.what()}, {"witness", e.witness()}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SchemaError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SchemaError, path + ": " + e.what());
  }
}

namespace detail {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::SchemaError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SchemaError, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Frames

/// {"name", "elements", "covers"}; with_tables adds the raw operation tables.
inline json frame_to_json(const FiniteFrame& F, bool with_tables = false) {
  json covers = json::array();
  for (auto [x, y] : F.covers()) covers.push_back({F.name_of(x), F.name_of(y)});
  json j{{"name", F.name()}, {"elements", F.names()}, {"covers", covers}};
  if (with_tables) {
    const auto n = F.size();
    const auto& t = F.tables();
    auto grid = [&](const std::vector<Elem>& v) {
      json rows = json::array();
      for (std::size_t a = 0; a < n; ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < n; ++b) row.push_back(F.name_of(v[a * n + b]));
        rows.push_back(row);
      }
      return rows;
    };
    json leq = json::array();
    for (std::size_t a = 0; a < n; ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < n; ++b) row.push_back(int(t.leq[a * n + b]));
      leq.push_back(row);
    }
    json pstar = json::array();
    for (Elem v : t.pstar) pstar.push_back(F.name_of(v));
    j["tables"] = {{"leq", leq},           {"meet", grid(t.meet)},          {"join", grid(t.join)},
                   {"arrow", grid(t.arrow)}, {"pstar", pstar},                {"bottom", F.name_of(t.bottom)},
                   {"top", F.name_of(t.top)}};
  }
  return j;
}

/// Parses a frame file. With "tables" the tables are taken verbatim (no
/// validation), which is how mutated fixtures travel in counterexamples.
inline FramePtr frame_from_json(const json& j) {
  const auto name = j.contains("name") ? detail::field<std::string>(j, "name") : std::string("frame");
  auto elements = detail::field<std::vector<std::string>>(j, "elements");
  if (j.contains("tables")) {
    const json& t = j.at("tables");
    std::map<std::string, Elem> idx;
    for (Elem i = 0; i < elements.size(); ++i) idx[elements[i]] = i;
    auto id = [&](const json& v) {
      auto s = v.get<std::string>();
      auto it = idx.find(s);
      if (it == idx.end()) throw Error(ErrorKind::UnknownElement, "table mentions unknown element '" + s + "'", {s});
      return it->second;
    };
    const std::size_t n = elements.size();
    FrameTables tab;
    auto grid = [&](const char* key, std::vector<Elem>& out) {
      out.assign(n * n, 0);
      const json& g = t.at(key);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) out[a * n + b] = id(g.at(a).at(b));
    };
    try {
      tab.leq.assign(n * n, 0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) tab.leq[a * n + b] = t.at("leq").at(a).at(b).get<int>() != 0;
      grid("meet", tab.meet);
      grid("join", tab.join);
      grid("arrow", tab.arrow);
      for (std::size_t a = 0; a < n; ++a) tab.pstar.push_back(id(t.at("pstar").at(a)));
      tab.bottom = id(t.at("bottom"));
      tab.top = id(t.at("top"));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::SchemaError, std::string("frame tables: ") + e.what());
    }
    return std::make_shared<const FiniteFrame>(name, std::move(elements), std::move(tab));
  }
  if (j.contains("order"))
    return validate_frame(name, std::move(elements), detail::field<std::vector<std::pair<std::string, std::string>>>(j, "order"),
                          RelationKind::full);
  return validate_frame(name, std::move(elements),
                        j.contains("covers") ? detail::field<std::vector<std::pair<std::string, std::string>>>(j, "covers")
                                             : std::vector<std::pair<std::string, std::string>>{},
                        RelationKind::covers);
}

inline FinitePoset poset_from_json(const json& j) {
  auto elements = detail::field<std::vector<std::string>>(j, "elements");
  const char* key = j.contains("order") ? "order" : "covers";
  auto rel = j.contains(key) ? detail::field<std::vector<std::pair<std::string, std::string>>>(j, key)
                             : std::vector<std::pair<std::string, std::string>>{};
  return make_poset(std::move(elements), rel);
}

inline json poset_to_json(const FinitePoset& P) {
  json order = json::array();
  for (Elem a = 0; a < P.size(); ++a)
    for (Elem b = 0; b < P.size(); ++b)
      if (a != b && P.leq(a, b)) order.push_back({P.names[a], P.names[b]});
  return json{{"elements", P.names}, {"order", order}};
}

// ---------------------------------------------------------------------------
// Spaces and grids

inline SpacePtr space_from_json(const json& j) {
  auto points = detail::field<std::vector<std::string>>(j, "points");
  auto opens = detail::field<std::vector<std::vector<std::string>>>(j, "opens");
  std::vector<PointSet> masks;
  for (const auto& U : opens) {
    PointSet m = 0;
    for (const auto& p : U) {
      auto it = std::find(points.begin(), points.end(), p);
      if (it == points.end()) throw Error(ErrorKind::UnknownElement, "open set mentions unknown point '" + p + "'", {p});
      m |= PointSet(1) << (it - points.begin());
    }
    masks.push_back(m);
  }
  const auto name = j.contains("name") ? detail::field<std::string>(j, "name") : std::string("X");
  return std::make_shared<const FiniteSpace>(std::move(points), std::move(masks), name);
}

inline json space_to_json(const FiniteSpace& X) {
  json opens = json::array();
  for (PointSet U : X.opens()) {
    json u = json::array();
    for (std::size_t i = 0; i < X.size(); ++i)
      if (U >> i & 1) u.push_back(X.points()[i]);
    opens.push_back(u);
  }
  return json{{"name", X.name()}, {"points", X.points()}, {"opens", opens}};
}

inline Grid grid_from_json(const json& j) {
  Grid g;
  for (const auto& s : detail::field<std::vector<std::string>>(j, "values")) g.values.push_back(parse_rational(s));
  if (j.contains("allow_infinities")) g.allow_infinities = detail::field<bool>(j, "allow_infinities");
  return g;
}

/// "0,1/2,1" → grid values.
inline Grid grid_from_string(const std::string& text, bool allow_infinities = false) {
  Grid g{{}, allow_infinities};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) g.values.push_back(parse_rational(item));
  return g;
}

// ---------------------------------------------------------------------------
// Frame registry: resolves frame names used in function files.

/// Names resolve to builtin frames, registered frames, spaces' open frames
/// "O(X)", enumerated frames "L<n>_<k>", and the derived frames "coS(name)"
/// and "B(name)". Derived frames are cached so functions loaded through one
/// registry share codomains.
class Registry {
 public:
  Registry() {
    for (auto& F : builtin::named_frames()) add(F);
    add_space(builtin::sierpinski());
    add_space(builtin::three_point());
  }

  void add(const FramePtr& F) {
    frames_[F->name()] = F;
    cos_.erase(F->name());
    boole_.erase(F->name());
  }

  void add_space(const SpacePtr& X) {
    spaces_[X->frame()->name()] = X;
    add(X->frame());
  }

  FramePtr frame(const std::string& name) {
    if (auto inner = unwrap(name, "coS(")) return sublocales(*inner)->frame();
    if (auto inner = unwrap(name, "B(")) return booleanization(*inner).frame;
    auto it = frames_.find(name);
    if (it != frames_.end()) return it->second;
    if (name.size() > 1 && name[0] == 'L') {
      const auto us = name.find('_');
      if (us != std::string::npos) {
        std::size_t n = 0;
        try {
          n = std::stoul(name.substr(1, us - 1));
        } catch (...) {
          n = 0;
        }
        if (n >= 1 && n <= kDefaultEnumerationLimit) {
          for (auto& F : enumerate_frames(n))
            if (F->size() == n) frames_.emplace(F->name(), F);
          it = frames_.find(name);
          if (it != frames_.end()) return it->second;
        }
      }
    }
    throw Error(ErrorKind::UnknownElement, "unknown frame '" + name + "'", {name});
  }

  SublocaleFramePtr sublocales(const std::string& parent, std::size_t limit = 16) {
    auto it = cos_.find(parent);
    if (it != cos_.end()) return it->second;
    auto sp = spaces_.find(parent);
    SublocaleFramePtr sf = sp != spaces_.end() ? share(all_sublocales(sp->second, limit))
                                               : share(all_sublocales(frame(parent), limit));
    cos_[parent] = sf;
    return sf;
  }

  const Booleanization& booleanization(const std::string& parent) {
    auto it = boole_.find(parent);
    if (it != boole_.end()) return it->second;
    return boole_.emplace(parent, pfr::booleanization(frame(parent))).first->second;
  }

  /// Sublocale frame whose frame is F, if F came from this registry.
  SublocaleFramePtr sublocale_handle(const FramePtr& F) const {
    for (const auto& [name, sf] : cos_)
      if (sf->frame() == F) return sf;
    return nullptr;
  }

  std::optional<SpacePtr> space(const std::string& frame_name) const {
    auto it = spaces_.find(frame_name);
    if (it == spaces_.end()) return std::nullopt;
    return it->second;
  }

 private:
  static std::optional<std::string> unwrap(const std::string& name, const std::string& prefix) {
    if (name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0 && name.back() == ')')
      return name.substr(prefix.size(), name.size() - prefix.size() - 1);
    return std::nullopt;
  }

  std::map<std::string, FramePtr> frames_;
  std::map<std::string, SpacePtr> spaces_;
  std::map<std::string, SublocaleFramePtr> cos_;
  std::map<std::string, Booleanization> boole_;
};

// ---------------------------------------------------------------------------
// Functions

inline json trail_to_json(const Trail& t, const FiniteFrame& M) {
  json bps = json::array(), vals = json::array();
  for (const auto& b : t.breakpoints) bps.push_back(to_string(b));
  for (Elem v : t.values) vals.push_back(M.name_of(v));
  return json{{"breakpoints", bps}, {"values", vals}};
}

inline json fn_to_json(const Fn& f) {
  return json{{"frame", f.M().name()}, {"lower", trail_to_json(f.lower(), f.M())}, {"upper", trail_to_json(f.upper(), f.M())}};
}

inline Trail trail_from_json(const json& j, TrailKind kind, const FiniteFrame& M) {
  Trail t{kind, {}, {}};
  for (const auto& s : detail::field<std::vector<std::string>>(j, "breakpoints")) t.breakpoints.push_back(parse_rational(s));
  for (const auto& s : detail::field<std::vector<std::string>>(j, "values")) t.values.push_back(M.at(s));
  return t;
}

inline Fn fn_from_json(const json& j, Registry& reg) {
  const auto name = detail::field<std::string>(j, "frame");
  FramePtr M = reg.frame(name);
  if (!j.contains("lower") || !j.contains("upper")) throw Error(ErrorKind::SchemaError, "function needs lower and upper trails");
  return Fn(M, trail_from_json(j.at("lower"), TrailKind::lower, *M), trail_from_json(j.at("upper"), TrailKind::upper, *M),
            reg.sublocale_handle(M));
}

inline json point_fn_to_json(const PointFn& phi) {
  json values = json::object();
  for (std::size_t i = 0; i < phi.values.size(); ++i) values[phi.space->points()[i]] = to_string(phi.values[i]);
  return values;
}

// ---------------------------------------------------------------------------
// Sublocales

inline json sublocale_to_json(const Sublocale& S) {
  json carrier = json::array();
  for (Elem a : S.elements()) carrier.push_back(S.parent->name_of(a));
  return json{{"frame", S.parent->name()}, {"carrier", carrier}};
}

inline Sublocale sublocale_from_json(const json& j, Registry& reg) {
  FramePtr L = reg.frame(detail::field<std::string>(j, "frame"));
  Carrier S = 0;
  for (const auto& s : detail::field<std::vector<std::string>>(j, "carrier")) S |= bit(L->at(s));
  return make_sublocale(L, S);
}

/// coS(L) as a frame file plus closed/open/induced tags.
inline json sublocale_frame_to_json(const SublocaleFrame& sf) {
  json j = frame_to_json(*sf.frame());
  json closed = json::object(), open = json::object(), induced = json::object();
  for (Elem e = 0; e < sf.size(); ++e) {
    const auto& nm = sf.frame()->name_of(e);
    if (auto a = sf.closed_tag(e)) closed[nm] = sf.parent()->name_of(*a);
    if (auto a = sf.open_tag(e)) open[nm] = sf.parent()->name_of(*a);
    if (auto A = sf.induced_tag(e)) induced[nm] = sf.space()->set_name(*A);
  }
  j["tags"] = {{"closed", closed}, {"open", open}, {"induced", induced}};
  return j;
}

}  // namespace pfr
