// Command-line surface: parse presentation files, dispatch constructions and
// verifications, emit deterministic reports.
//
// Exit codes: 0 all checks pass; 1 verification failure; 2 input/schema
// error; 3 unsupported characteristic.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shopf/json_io.hpp"

using namespace shopf;
namespace fs = std::filesystem;

namespace {

struct Options {
  std::string field = "Q";
  std::string out = "json";
  int degree_bound = 8;
  bool strict = false;
  bool timings = false;
};

int exit_code_for(const error& e) {
  switch (e.kind) {
    case ErrKind::unsupported_characteristic: return 3;
    case ErrKind::not_hopf: return 1;
    case ErrKind::schema:
    case ErrKind::invalid_input:
    case ErrKind::internal: return 2;
  }
  return 2;
}

void emit(const json& report, const Options& opt) {
  if (opt.out == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::cout << report.value("command", "") << " [" << report.value("field", "") << "] "
            << report.value("status", "") << "\n";
  if (report.contains("checks"))
    for (const auto& c : report["checks"]) {
      std::cout << "  " << (c["pass"].get<bool>() ? "pass" : "FAIL") << "  "
                << c["name"].get<std::string>();
      if (c.contains("witness")) std::cout << "  [" << c["witness"].get<std::string>() << "]";
      std::cout << "\n";
    }
  if (report.contains("artifact"))
    for (const auto& [k, v] : report["artifact"].items())
      if (!v.is_structured()) std::cout << "  " << k << " = " << v.dump() << "\n";
  if (report.contains("rows"))
    for (const auto& r : report["rows"]) {
      std::cout << "  " << r.value("file", "");
      for (const auto& [k, v] : r.items())
        if (k != "file") std::cout << "  " << k << "=" << v.dump();
      std::cout << "\n";
    }
}

json base_report(const std::string& command, const Options& opt) {
  json rep;
  rep["command"] = command;
  rep["field"] = opt.field;
  return rep;
}

int finish(json& rep, const CheckReport& checks, const Options& opt,
           std::chrono::steady_clock::time_point t0) {
  rep["checks"] = report_json(checks);
  bool pass = checks.all_pass();
  rep["status"] = pass ? "pass" : "fail";
  if (opt.timings) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    rep["timings"] = {{"total_ms", ms}};
  }
  emit(rep, opt);
  return pass ? 0 : 1;
}

// pair inputs may be presentation files or Lie superalgebra files
DHCPData load_pair(const json& j, const FieldSpec& f, const Options& opt,
                   const std::string& path) {
  std::string t = file_type(j, path);
  if (t == "dhcp") return parse_dhcp(j, f, path, opt.degree_bound);
  if (t == "lie-superalgebra")
    return from_lie_superalgebra(parse_lsa(j, f, path), opt.degree_bound);
  throw error(ErrKind::schema, path + ": expected a 'dhcp' or 'lie-superalgebra' file");
}

int cmd_verify_hopf(const std::string& path, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  FieldSpec f = FieldSpec::parse(opt.field);
  json j = load_json(path);
  if (file_type(j, path) != "hopf") throw error(ErrKind::schema, path + ": expected a 'hopf' file");
  HopfAlgebra h = parse_hopf(j, f, path);
  CheckReport axioms = verify_hopf(h);
  CheckReport rep = axioms;
  auto sc = verify_super_commutative(h);
  rep.add("super-commutative", sc.pass, sc.witness);
  auto scc = verify_super_cocommutative(h);
  rep.add("super-cocommutative", scc.pass, scc.witness);
  json out = base_report("verify-hopf", opt);
  out["input"] = path;
  out["artifact"] = {{"dim", h.dim()}};
  out["checks"] = report_json(rep);
  // the two commutativity predicates are informative, not axioms
  out["status"] = axioms.all_pass() ? "pass" : "fail";
  if (opt.timings) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    out["timings"] = {{"total_ms", ms}};
  }
  emit(out, opt);
  return axioms.all_pass() ? 0 : 1;
}

int cmd_verify_dhcp(const std::string& path, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  FieldSpec f = FieldSpec::parse(opt.field);
  json j = load_json(path);
  DHCPData d = load_pair(j, f, opt, path);
  CheckReport rep = verify_dhcp(d);
  json out = base_report("verify-dhcp", opt);
  out["input"] = path;
  out["artifact"] = {{"dim_V", d.dimV()},
                     {"J", d.pres.ring->finite() ? "finite" : "enveloping"}};
  return finish(out, rep, opt, t0);
}

int cmd_verify_hcp(const std::string& path, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  FieldSpec f = FieldSpec::parse(opt.field);
  json j = load_json(path);
  if (file_type(j, path) != "hcp") throw error(ErrKind::schema, path + ": expected an 'hcp' file");
  HCPData h = parse_hcp(j, f, path);
  CheckReport rep = verify_hcp(h);
  json out = base_report("verify-hcp", opt);
  out["input"] = path;
  out["artifact"] = {{"dim_C", h.C.dim()}, {"dim_W", h.dimW()}};
  return finish(out, rep, opt, t0);
}

int cmd_check_overlaps(const std::string& path, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  FieldSpec f = FieldSpec::parse(opt.field);
  json j = load_json(path);
  DHCPData d = load_pair(j, f, opt, path);
  auto rep = check_overlaps(d.pres, opt.strict);
  json out = base_report("check-overlaps", opt);
  out["input"] = path;
  json items = json::array();
  for (const auto& it : rep.items) {
    json item;
    item["word"] = it.word;
    item["resolvable"] = it.resolvable;
    if (!it.resolvable) item["difference"] = it.difference;
    items.push_back(item);
  }
  out["artifact"] = {{"ambiguities", items}, {"count", (int)rep.items.size()}};
  CheckReport checks;
  checks.add("all-ambiguities-resolvable", rep.all_resolvable);
  return finish(out, checks, opt, t0);
}

int cmd_build_h(const std::string& path, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  FieldSpec f = FieldSpec::parse(opt.field);
  json j = load_json(path);
  DHCPData d = load_pair(j, f, opt, path);
  CheckReport rep = verify_dhcp(d);
  auto ov = check_overlaps(d.pres, opt.strict);
  rep.add("overlaps-resolvable", ov.all_resolvable);
  json out = base_report("build-h", opt);
  out["input"] = path;
  if (!rep.all_pass()) return finish(out, rep, opt, t0);
  if (d.pres.ring->finite()) {
    auto H = build_H(d);
    rep.add("H-hopf-axioms", verify_hopf(H.hopf).all_pass());
    rep.add("H-super-cocommutative", verify_super_cocommutative(H.hopf).pass);
    out["artifact"] = {{"dim", H.hopf.dim()},
                       {"dim_J", d.pres.ring->dim()},
                       {"dim_V", d.dimV()},
                       {"hopf", hopf_json(H.hopf)}};
  } else {
    // enveloping J: H(J,V) stays procedural; report the J-free shape
    out["artifact"] = {{"representation", "procedural"},
                       {"pbw_degree_bound", opt.degree_bound},
                       {"wedge_words", 1 << d.dimV()},
                       {"dim_V", d.dimV()}};
  }
  return finish(out, rep, opt, t0);
}

int cmd_build_a(const std::string& path, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  FieldSpec f = FieldSpec::parse(opt.field);
  json j = load_json(path);
  if (file_type(j, path) != "hcp") throw error(ErrKind::schema, path + ": expected an 'hcp' file");
  HCPData h = parse_hcp(j, f, path);
  CheckReport rep = verify_hcp(h);
  json out = base_report("build-a", opt);
  out["input"] = path;
  if (!rep.all_pass()) return finish(out, rep, opt, t0);
  auto A = build_A(h);
  rep.merge(A.restriction);
  rep.add("A-hopf-axioms", verify_hopf(A.hopf).all_pass());
  rep.add("A-super-commutative", verify_super_commutative(A.hopf).pass);
  rep.merge(psi_prime(h, A));
  out["artifact"] = {{"dim", A.hopf.dim()},
                     {"dim_C", h.C.dim()},
                     {"dim_W", h.dimW()},
                     {"hopf", hopf_json(A.hopf)}};
  return finish(out, rep, opt, t0);
}

int cmd_pair(const std::string& path, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  FieldSpec f = FieldSpec::parse(opt.field);
  json j = load_json(path);
  if (file_type(j, path) != "hcp")
    throw error(ErrKind::schema, path + ": the pair command expects an 'hcp' file");
  HCPData h = parse_hcp(j, f, path);
  CheckReport rep = verify_hcp(h);
  json out = base_report("pair", opt);
  out["input"] = path;
  if (!rep.all_pass()) return finish(out, rep, opt, t0);
  auto d = associated_dhcp(h);
  auto H = build_H(d);
  auto A = build_A(h);
  auto P = pair_H_A(d, H, A);
  rep.merge(P.laws);
  rep.add("pairing-nondegenerate", P.nondegenerate);
  json mat = json::array();
  for (int r = 0; r < P.matrix.nrows(); ++r)
    for (const auto& [c, v] : P.matrix.rows[r])
      mat.push_back({H.hopf.space.names[r], A.hopf.space.names[c], v.str()});
  out["artifact"] = {{"dim_H", H.hopf.dim()}, {"dim_A", A.hopf.dim()}, {"matrix", mat}};
  return finish(out, rep, opt, t0);
}

int cmd_roundtrip(const std::string& path, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  FieldSpec f = FieldSpec::parse(opt.field);
  json j = load_json(path);
  std::string t = file_type(j, path);
  json out = base_report("roundtrip", opt);
  out["input"] = path;
  if (t == "hcp") {
    HCPData h = parse_hcp(j, f, path);
    CheckReport rep = hcp_roundtrip(h);
    auto A = build_A(h);
    auto beta = beta_roundtrip(A.hopf);
    rep.merge(beta.checks);
    rep.add("beta-isomorphism", beta.is_isomorphism);
    return finish(out, rep, opt, t0);
  }
  DHCPData d = load_pair(j, f, opt, path);
  if (!d.pres.ring->finite())
    throw error(ErrKind::invalid_input,
                path + ": round trips need finite-dimensional J (enveloping pairs are procedural)");
  CheckReport rep = verify_dhcp(d);
  if (rep.all_pass()) rep.merge(dhcp_roundtrip(d));
  return finish(out, rep, opt, t0);
}

int cmd_classify(const std::vector<std::string>& inputs, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  FieldSpec f = FieldSpec::parse(opt.field);
  std::vector<std::string> files;
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      std::vector<std::string> here;
      for (const auto& e : fs::directory_iterator(in))
        if (e.path().extension() == ".json") here.push_back(e.path().string());
      std::sort(here.begin(), here.end());
      files.insert(files.end(), here.begin(), here.end());
    } else {
      files.push_back(in);
    }
  }
  json rows = json::array();
  bool any_fail = false;
  for (const auto& path : files) {
    json row;
    row["file"] = fs::path(path).filename().string();
    try {
      json j = load_json(path);
      std::string t = file_type(j, path);
      HopfAlgebra a;
      if (t == "hopf") {
        a = parse_hopf(j, f, path);
      } else if (t == "hcp") {
        HCPData h = parse_hcp(j, f, path);
        a = build_A(h).hopf;
      } else if (t == "dhcp" || t == "lie-superalgebra") {
        DHCPData d = load_pair(j, f, opt, path);
        if (!d.pres.ring->finite()) {
          row["skipped"] = "enveloping pair (procedural H)";
          rows.push_back(row);
          continue;
        }
        auto rep = verify_dhcp(d);
        if (!rep.all_pass()) {
          row["error"] = "invalid pair";
          any_fail = true;
          rows.push_back(row);
          continue;
        }
        a = build_H(d).hopf;
      } else {
        row["skipped"] = "unclassifiable type '" + t + "'";
        rows.push_back(row);
        continue;
      }
      row["dim"] = a.dim();
      row["purely_even"] = is_purely_even(a);
      try {
        row["irreducible"] = is_irreducible(a);
      } catch (const error& e) {
        row["irreducible"] = std::string("error: ") + e.what();
      }
      try {
        row["semisimple"] = is_semisimple_algebra(a);
      } catch (const error& e) {
        row["semisimple"] = std::string("error: ") + e.what();
      }
      if (verify_super_commutative(a).pass) {
        try {
          auto flags = unipotence_check(a);
          row["abar_irreducible"] = flags.abar_irreducible;
          row["unipotence_flags_agree"] = flags.a_irreducible == flags.abar_irreducible;
        } catch (const error& e) {
          row["abar_irreducible"] = std::string("error: ") + e.what();
        }
      }
    } catch (const error& e) {
      row["error"] = e.what();
      any_fail = true;
    }
    rows.push_back(row);
  }
  json out = base_report("classify", opt);
  out["rows"] = rows;
  out["status"] = any_fail ? "fail" : "pass";
  if (opt.timings) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    out["timings"] = {{"total_ms", ms}};
  }
  emit(out, opt);
  return any_fail ? 1 : 0;
}

int cmd_normalize(const std::string& pres_path, const std::string& elem_path, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  FieldSpec f = FieldSpec::parse(opt.field);
  json pj = load_json(pres_path);
  DHCPData d = load_pair(pj, f, opt, pres_path);
  json ej = load_json(elem_path);
  if (file_type(ej, elem_path) != "element")
    throw error(ErrKind::schema, elem_path + ": expected an 'element' file");
  MElem e = parse_element(ej, d.pres, elem_path);
  NormalElement n = normalize(std::move(e), d.pres, opt.strict);
  json out = base_report("normalize", opt);
  out["input"] = pres_path;
  out["artifact"] = {{"normal_form", normal_json(n, d.pres)},
                     {"rendered", normal_str(n, d.pres)}};
  CheckReport rep;
  rep.add("normalized", true);
  return finish(out, rep, opt, t0);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer algebra for Hopf superalgebras and Harish-Chandra pairs"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--field", opt.field, "coefficient field: Q, F<p> or Fp:<p> (p an odd prime)");
  app.add_option("--out", opt.out, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--degree-bound", opt.degree_bound, "PBW degree bound for enveloping pairs");
  app.add_flag("--strict", opt.strict, "assert the order decrease of every rewrite step");
  app.add_flag("--timings", opt.timings, "include timings in the report");

  std::string in1, in2;
  std::vector<std::string> ins;
  auto* c_vh = app.add_subcommand("verify-hopf", "verify the Hopf superalgebra axioms");
  c_vh->add_option("input", in1)->required();
  auto* c_vd = app.add_subcommand("verify-dhcp", "verify the dual-pair conditions (a)-(d)");
  c_vd->add_option("input", in1)->required();
  auto* c_vp = app.add_subcommand("verify-hcp", "verify a Harish-Chandra pair");
  c_vp->add_option("input", in1)->required();
  auto* c_co = app.add_subcommand("check-overlaps", "resolve all overlap ambiguities");
  c_co->add_option("input", in1)->required();
  auto* c_bh = app.add_subcommand("build-h", "build H(J,V) in PBW normal form");
  c_bh->add_option("input", in1)->required();
  auto* c_ba = app.add_subcommand("build-a", "build A(C,W) as a pairing annihilator");
  c_ba->add_option("input", in1)->required();
  auto* c_pr = app.add_subcommand("pair", "the H(J,V) x A(C,W) Hopf pairing");
  c_pr->add_option("input", in1)->required();
  auto* c_rt = app.add_subcommand("roundtrip", "verify the category-equivalence round trips");
  c_rt->add_option("input", in1)->required();
  auto* c_cl = app.add_subcommand("classify", "predicate battery over files or directories");
  c_cl->add_option("inputs", ins)->required();
  auto* c_nm = app.add_subcommand("normalize", "normal form of an element of H(J,V)");
  c_nm->add_option("presentation", in1)->required();
  c_nm->add_option("element", in2)->required();
  for (auto* sc : {c_vh, c_vd, c_vp, c_co, c_bh, c_ba, c_pr, c_rt, c_cl, c_nm})
    sc->fallthrough();

  CLI11_PARSE(app, argc, argv);
  try {
    if (c_vh->parsed()) return cmd_verify_hopf(in1, opt);
    if (c_vd->parsed()) return cmd_verify_dhcp(in1, opt);
    if (c_vp->parsed()) return cmd_verify_hcp(in1, opt);
    if (c_co->parsed()) return cmd_check_overlaps(in1, opt);
    if (c_bh->parsed()) return cmd_build_h(in1, opt);
    if (c_ba->parsed()) return cmd_build_a(in1, opt);
    if (c_pr->parsed()) return cmd_pair(in1, opt);
    if (c_rt->parsed()) return cmd_roundtrip(in1, opt);
    if (c_cl->parsed()) return cmd_classify(ins, opt);
    if (c_nm->parsed()) return cmd_normalize(in1, in2, opt);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
