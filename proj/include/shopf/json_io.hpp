// JSON schemas for the file formats: Hopf superalgebras by structure
// constants, J-ring presentations (dual pairs), Lie superalgebras,
// Harish-Chandra pairs, elements, and the report payloads. Scalars travel as
// strings ("3/4", "-1"); unknown fields are rejected.
#pragma once

#include <fstream>
#include <set>
#include <string>

#include <json.hpp>

#include "shopf/corpus.hpp"

namespace shopf {

using json = nlohmann::json;

inline void reject_unknown(const json& j, const std::set<std::string>& allowed,
                           const std::string& where) {
  if (!j.is_object()) throw error(ErrKind::schema, where + ": expected an object");
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (!allowed.count(k)) throw error(ErrKind::schema, where + ": unknown field '" + k + "'");
  }
}

inline const json& need(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw error(ErrKind::schema, where + ": missing field '" + key + "'");
  return *it;
}

inline std::string str_at(const json& j, size_t i, const std::string& where) {
  if (!j.is_array() || j.size() <= i || !j[i].is_string())
    throw error(ErrKind::schema, where + ": expected a string at position " + std::to_string(i));
  return j[i].get<std::string>();
}

// ---------------------------------------------------------------------------
// SuperSpace / basis.

inline SuperSpace parse_basis(const json& j, const std::string& where) {
  if (!j.is_array()) throw error(ErrKind::schema, where + ": basis must be an array");
  std::vector<std::string> names;
  std::vector<int> par;
  for (const auto& e : j) {
    reject_unknown(e, {"name", "parity"}, where + ".basis");
    names.push_back(need(e, "name", where).get<std::string>());
    int p = need(e, "parity", where).get<int>();
    if (p != 0 && p != 1) throw error(ErrKind::schema, where + ": parity must be 0 or 1");
    par.push_back(p);
  }
  try {
    return SuperSpace(names, par);
  } catch (const error& e) {
    throw error(ErrKind::schema, where + ": " + e.what());
  }
}

inline json basis_json(const SuperSpace& s) {
  json out = json::array();
  for (int i = 0; i < s.dim(); ++i)
    out.push_back({{"name", s.names[i]}, {"parity", s.parity[i]}});
  return out;
}

// ---------------------------------------------------------------------------
// Hopf superalgebra files.

inline HopfAlgebra parse_hopf(const json& j, const FieldSpec& f, const std::string& where) {
  reject_unknown(j, {"type", "basis", "mult", "unit", "comult", "counit", "antipode"}, where);
  HopfAlgebra h;
  h.field = f;
  h.space = parse_basis(need(j, "basis", where), where);
  int n = h.space.dim();
  h.mult.assign(n, std::vector<SVec>(n));
  for (const auto& e : need(j, "mult", where)) {
    if (!e.is_array() || e.size() != 4) throw error(ErrKind::schema, where + ": mult entries are [a,b,out,coeff]");
    int a = h.space.index(str_at(e, 0, where));
    int b = h.space.index(str_at(e, 1, where));
    int c = h.space.index(str_at(e, 2, where));
    add_term(h.mult[a][b], c, Scalar::parse(f, str_at(e, 3, where)));
  }
  for (const auto& e : need(j, "unit", where)) {
    if (!e.is_array() || e.size() != 2) throw error(ErrKind::schema, where + ": unit entries are [e,coeff]");
    add_term(h.unit, h.space.index(str_at(e, 0, where)), Scalar::parse(f, str_at(e, 1, where)));
  }
  h.comult.assign(n, SVec2{});
  for (const auto& e : need(j, "comult", where)) {
    if (!e.is_array() || e.size() != 4)
      throw error(ErrKind::schema, where + ": comult entries are [a,left,right,coeff]");
    int a = h.space.index(str_at(e, 0, where));
    int l = h.space.index(str_at(e, 1, where));
    int r = h.space.index(str_at(e, 2, where));
    add_term(h.comult[a], {l, r}, Scalar::parse(f, str_at(e, 3, where)));
  }
  h.counit.assign(n, Scalar::zero(f));
  for (const auto& e : need(j, "counit", where)) {
    if (!e.is_array() || e.size() != 2) throw error(ErrKind::schema, where + ": counit entries are [e,coeff]");
    h.counit[h.space.index(str_at(e, 0, where))] = Scalar::parse(f, str_at(e, 1, where));
  }
  if (j.contains("antipode")) {
    h.antipode.assign(n, SVec{});
    for (const auto& e : j["antipode"]) {
      if (!e.is_array() || e.size() != 3)
        throw error(ErrKind::schema, where + ": antipode entries are [a,out,coeff]");
      int a = h.space.index(str_at(e, 0, where));
      int b = h.space.index(str_at(e, 1, where));
      add_term(h.antipode[a], b, Scalar::parse(f, str_at(e, 2, where)));
    }
  } else {
    solve_antipode(h); // may throw not_hopf
  }
  return h;
}

inline json hopf_json(const HopfAlgebra& h) {
  json out;
  out["type"] = "hopf";
  out["basis"] = basis_json(h.space);
  json mult = json::array();
  for (int a = 0; a < h.dim(); ++a)
    for (int b = 0; b < h.dim(); ++b)
      for (const auto& [c, v] : h.mult[a][b])
        mult.push_back({h.space.names[a], h.space.names[b], h.space.names[c], v.str()});
  out["mult"] = mult;
  json unit = json::array();
  for (const auto& [e, v] : h.unit) unit.push_back({h.space.names[e], v.str()});
  out["unit"] = unit;
  json comult = json::array();
  for (int a = 0; a < h.dim(); ++a)
    for (const auto& [lr, v] : h.comult[a])
      comult.push_back(
          {h.space.names[a], h.space.names[lr.first], h.space.names[lr.second], v.str()});
  out["comult"] = comult;
  json counit = json::array();
  for (int a = 0; a < h.dim(); ++a)
    if (!h.counit[a].is_zero()) counit.push_back({h.space.names[a], h.counit[a].str()});
  out["counit"] = counit;
  if (h.has_antipode()) {
    json anti = json::array();
    for (int a = 0; a < h.dim(); ++a)
      for (const auto& [b, v] : h.antipode[a])
        anti.push_back({h.space.names[a], h.space.names[b], v.str()});
    out["antipode"] = anti;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Presentations (dual pairs). J is either a finite Hopf algebra or an
// enveloping algebra given by Lie structure constants.

inline DHCPData parse_dhcp(const json& j, const FieldSpec& f, const std::string& where,
                           int pbw_cap = 8) {
  reject_unknown(j, {"type", "J", "X", "action", "bracket"}, where);
  DHCPData d;
  const json& J = need(j, "J", where);
  reject_unknown(J, {"hopf", "enveloping"}, where + ".J");
  std::vector<std::string> jnames; // generator names rule entries refer to
  PbwRing* pbw = nullptr;
  if (J.contains("hopf")) {
    auto h = parse_hopf(J["hopf"], f, where + ".J.hopf");
    jnames = h.space.names;
    d.pres.ring = std::make_shared<FiniteJRing>(std::move(h));
  } else if (J.contains("enveloping")) {
    const json& env = J["enveloping"];
    reject_unknown(env, {"basis", "bracket"}, where + ".J.enveloping");
    LieAlgebra lie;
    lie.field = f;
    for (const auto& e : need(env, "basis", where)) lie.names.push_back(e.get<std::string>());
    int r = (int)lie.names.size();
    auto gidx = [&](const std::string& n) {
      for (int i = 0; i < r; ++i)
        if (lie.names[i] == n) return i;
      throw error(ErrKind::schema, where + ": unknown Lie generator '" + n + "'");
    };
    lie.bracket.assign(r, std::vector<SVec>(r));
    for (const auto& e : need(env, "bracket", where)) {
      if (!e.is_array() || e.size() != 4)
        throw error(ErrKind::schema, where + ": Lie bracket entries are [a,b,c,coeff]");
      add_term(lie.bracket[gidx(str_at(e, 0, where))][gidx(str_at(e, 1, where))],
               gidx(str_at(e, 2, where)), Scalar::parse(f, str_at(e, 3, where)));
    }
    auto ring = std::make_shared<PbwRing>(std::move(lie), pbw_cap);
    pbw = ring.get();
    jnames = pbw->lie().names;
    d.pres.ring = ring;
  } else {
    throw error(ErrKind::schema, where + ".J: needs 'hopf' or 'enveloping'");
  }
  std::vector<std::string> xnames;
  for (const auto& e : need(j, "X", where)) xnames.push_back(e.get<std::string>());
  d.pres.xspace = SuperSpace(xnames, std::vector<int>(xnames.size(), 1));
  auto xidx = [&](const std::string& n) { return d.pres.xspace.index(n); };
  auto jidx = [&](const std::string& n) {
    for (size_t i = 0; i < jnames.size(); ++i)
      if (jnames[i] == n) return (int)i;
    throw error(ErrKind::schema, where + ": unknown J generator '" + n + "'");
  };
  int nx = d.pres.nx();
  d.pres.gen_action.assign(nx, std::vector<SVec>(jnames.size()));
  for (const auto& e : need(j, "action", where)) {
    if (!e.is_array() || e.size() != 4)
      throw error(ErrKind::schema, where + ": action entries are [x,a,y,coeff]");
    add_term(d.pres.gen_action[xidx(str_at(e, 0, where))][jidx(str_at(e, 1, where))],
             xidx(str_at(e, 2, where)), Scalar::parse(f, str_at(e, 3, where)));
  }
  d.pres.bracket.assign(nx, std::vector<SVec>(nx));
  for (const auto& e : need(j, "bracket", where)) {
    if (!e.is_array() || e.size() != 4)
      throw error(ErrKind::schema, where + ": bracket entries are [x,y,a,coeff]");
    int a = jidx(str_at(e, 2, where));
    int target = pbw ? pbw->generator(a) : a;
    add_term(d.pres.bracket[xidx(str_at(e, 0, where))][xidx(str_at(e, 1, where))], target,
             Scalar::parse(f, str_at(e, 3, where)));
  }
  return d;
}

inline json dhcp_json(DHCPData& d) {
  json out;
  out["type"] = "dhcp";
  json J;
  if (d.pres.ring->finite()) {
    J["hopf"] = hopf_json(dynamic_cast<FiniteJRing*>(d.pres.ring.get())->hopf());
  } else {
    auto* pbw = dynamic_cast<PbwRing*>(d.pres.ring.get());
    const LieAlgebra& lie = pbw->lie();
    json env;
    env["basis"] = lie.names;
    json br = json::array();
    for (int i = 0; i < lie.dim(); ++i)
      for (int j2 = 0; j2 < lie.dim(); ++j2)
        for (const auto& [k, v] : lie.bracket[i][j2])
          br.push_back({lie.names[i], lie.names[j2], lie.names[k], v.str()});
    env["bracket"] = br;
    J["enveloping"] = env;
  }
  out["J"] = J;
  out["X"] = d.pres.xspace.names;
  json action = json::array();
  std::vector<std::string> gnames;
  if (d.pres.ring->finite())
    gnames = dynamic_cast<FiniteJRing*>(d.pres.ring.get())->hopf().space.names;
  else
    gnames = dynamic_cast<PbwRing*>(d.pres.ring.get())->lie().names;
  for (int x = 0; x < d.pres.nx(); ++x)
    for (size_t a = 0; a < gnames.size(); ++a)
      for (const auto& [y, v] : d.pres.gen_action[x][a])
        action.push_back({d.pres.xspace.names[x], gnames[a], d.pres.xspace.names[y], v.str()});
  out["action"] = action;
  json bracket = json::array();
  auto* pbw = d.pres.ring->finite() ? nullptr : dynamic_cast<PbwRing*>(d.pres.ring.get());
  for (int x = 0; x < d.pres.nx(); ++x)
    for (int y = 0; y < d.pres.nx(); ++y)
      for (const auto& [a, v] : d.pres.bracket[x][y]) {
        std::string an;
        if (pbw) {
          // bracket values of an enveloping pair are Lie elements
          auto gens = pbw->generator_sequence(a);
          if (gens.size() != 1)
            throw error(ErrKind::internal, "enveloping bracket value is not a Lie element");
          an = pbw->lie().names[gens[0]];
        } else {
          an = gnames[a];
        }
        bracket.push_back({d.pres.xspace.names[x], d.pres.xspace.names[y], an, v.str()});
      }
  out["bracket"] = bracket;
  return out;
}

// ---------------------------------------------------------------------------
// Lie superalgebra files (construct pairs via from_lie_superalgebra).

inline LieSuperAlgebra parse_lsa(const json& j, const FieldSpec& f, const std::string& where) {
  reject_unknown(j, {"type", "basis", "bracket"}, where);
  LieSuperAlgebra L;
  L.field = f;
  L.space = parse_basis(need(j, "basis", where), where);
  int n = L.dim();
  L.bracket.assign(n, std::vector<SVec>(n));
  for (const auto& e : need(j, "bracket", where)) {
    if (!e.is_array() || e.size() != 4)
      throw error(ErrKind::schema, where + ": bracket entries are [a,b,c,coeff]");
    add_term(L.bracket[L.space.index(str_at(e, 0, where))][L.space.index(str_at(e, 1, where))],
             L.space.index(str_at(e, 2, where)), Scalar::parse(f, str_at(e, 3, where)));
  }
  return L;
}

inline json lsa_json(const LieSuperAlgebra& L) {
  json out;
  out["type"] = "lie-superalgebra";
  out["basis"] = basis_json(L.space);
  json br = json::array();
  for (int i = 0; i < L.dim(); ++i)
    for (int j2 = 0; j2 < L.dim(); ++j2)
      for (const auto& [k, v] : L.bracket[i][j2])
        br.push_back({L.space.names[i], L.space.names[j2], L.space.names[k], v.str()});
  out["bracket"] = br;
  return out;
}

// ---------------------------------------------------------------------------
// Harish-Chandra pair files.

inline HCPData parse_hcp(const json& j, const FieldSpec& f, const std::string& where) {
  reject_unknown(j, {"type", "C", "W", "coaction", "bracket"}, where);
  HCPData h;
  h.C = parse_hopf(need(j, "C", where), f, where + ".C");
  std::vector<std::string> wnames;
  for (const auto& e : need(j, "W", where)) wnames.push_back(e.get<std::string>());
  h.W = SuperSpace(wnames, std::vector<int>(wnames.size(), 1));
  int nw = h.dimW();
  h.coaction.assign(nw, SVec2{});
  for (const auto& e : need(j, "coaction", where)) {
    if (!e.is_array() || e.size() != 4)
      throw error(ErrKind::schema, where + ": coaction entries are [w,w',c,coeff]");
    add_term(h.coaction[h.W.index(str_at(e, 0, where))],
             {h.W.index(str_at(e, 1, where)), h.C.space.index(str_at(e, 2, where))},
             Scalar::parse(f, str_at(e, 3, where)));
  }
  h.bracket.assign(nw, std::vector<SVec>(nw));
  for (const auto& e : need(j, "bracket", where)) {
    if (!e.is_array() || e.size() != 4)
      throw error(ErrKind::schema,
                  where + ": bracket entries are [w,w',c,coeff] with c naming the dual functional");
    add_term(h.bracket[h.W.index(str_at(e, 0, where))][h.W.index(str_at(e, 1, where))],
             h.C.space.index(str_at(e, 2, where)), Scalar::parse(f, str_at(e, 3, where)));
  }
  return h;
}

inline json hcp_json(const HCPData& h) {
  json out;
  out["type"] = "hcp";
  out["C"] = hopf_json(h.C);
  out["W"] = h.W.names;
  json co = json::array();
  for (int w = 0; w < h.dimW(); ++w)
    for (const auto& [ik, v] : h.coaction[w])
      co.push_back({h.W.names[w], h.W.names[ik.first], h.C.space.names[ik.second], v.str()});
  out["coaction"] = co;
  json br = json::array();
  for (int i = 0; i < h.dimW(); ++i)
    for (int j2 = 0; j2 < h.dimW(); ++j2)
      for (const auto& [c, v] : h.bracket[i][j2])
        br.push_back({h.W.names[i], h.W.names[j2], h.C.space.names[c], v.str()});
  out["bracket"] = br;
  return out;
}

// ---------------------------------------------------------------------------
// Elements (for normalize): words mix X letters and J generator names.

inline MElem parse_element(const json& j, JPresentation& p, const std::string& where) {
  reject_unknown(j, {"type", "terms"}, where);
  const FieldSpec& f = p.ring->field();
  std::vector<std::string> gnames;
  if (p.ring->finite())
    gnames = dynamic_cast<FiniteJRing*>(p.ring.get())->hopf().space.names;
  else
    gnames = dynamic_cast<PbwRing*>(p.ring.get())->lie().names;
  MElem out;
  for (const auto& t : need(j, "terms", where)) {
    reject_unknown(t, {"word", "coeff"}, where + ".terms");
    MWord w;
    for (const auto& sym : need(t, "word", where)) {
      std::string s = sym.get<std::string>();
      bool found = false;
      for (int x = 0; x < p.nx(); ++x)
        if (p.xspace.names[x] == s) {
          w.push_back(x_factor(x));
          found = true;
        }
      if (!found)
        for (size_t a = 0; a < gnames.size(); ++a)
          if (gnames[a] == s) {
            int idx = p.ring->finite() ? (int)a
                                       : dynamic_cast<PbwRing*>(p.ring.get())->generator((int)a);
            w.push_back(j_factor(idx));
            found = true;
          }
      if (!found) throw error(ErrKind::schema, where + ": unknown symbol '" + s + "'");
    }
    add_canonical(out, std::move(w), Scalar::parse(f, need(t, "coeff", where).get<std::string>()),
                  p);
  }
  return out;
}

inline json normal_json(const NormalElement& n, const JPresentation& p) {
  json out;
  out["type"] = "normal-element";
  json terms = json::array();
  for (const auto& [w, jv] : n.terms) {
    json word = json::array();
    for (int l : w) word.push_back(p.xspace.names[l]);
    json jcoeff = json::array();
    for (const auto& [a, c] : jv) jcoeff.push_back({p.ring->name(a), c.str()});
    terms.push_back({{"word", word}, {"j_coefficient", jcoeff}});
  }
  out["terms"] = terms;
  return out;
}

// ---------------------------------------------------------------------------
// File-level helpers.

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(ErrKind::schema, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw error(ErrKind::schema, path + ": " + e.what());
  }
  return j;
}

inline std::string file_type(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw error(ErrKind::schema, where + ": missing 'type'");
  return j["type"].get<std::string>();
}

inline json report_json(const CheckReport& rep) {
  json out = json::array();
  for (const auto& e : rep.entries) {
    json item;
    item["name"] = e.name;
    item["pass"] = e.pass;
    if (!e.witness.empty()) item["witness"] = e.witness;
    out.push_back(item);
  }
  return out;
}

} // namespace shopf
