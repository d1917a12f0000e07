#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ttg/json_io.hpp"
#include "ttg/parse.hpp"

using namespace ttg;

namespace {

GroupId group_from_flag(const std::string& spec) {
  if (spec == "Circle") return circle_group();
  if (spec == "O2") return o2_group();
  if (spec == "SO3") return so3_group();
  if (spec.rfind("Finite:", 0) == 0) return load_finite_group_file(spec.substr(7));
  fail(Errc::ParseError, "--group expects Circle, O2, SO3 or Finite:<path>, got '" + spec + "'");
}

json group_info_json(const GroupId& g) {
  json out;
  out["group"] = group_name(g);
  if (g.kind == GroupKind::Finite) {
    out["order"] = g.finite->n;
    json cls = json::array();
    for (std::size_t i = 0; i < g.finite->classes.size(); ++i) {
      const auto& c = g.finite->classes[i];
      json e;
      e["class"] = class_name(class_finite(static_cast<int>(i)));
      e["order"] = c.order;
      e["normalizer_order"] = c.normalizer_order;
      e["class_size"] = c.class_size;
      e["weyl_order"] = c.normalizer_order / c.order;
      cls.push_back(std::move(e));
    }
    out["classes"] = std::move(cls);
  } else {
    json fam = json::array();
    if (has_series(g, ClassKind::C)) fam.push_back("C(n)");
    if (has_series(g, ClassKind::D)) fam.push_back("D(n)");
    for (SubgroupClass k : special_classes(g)) fam.push_back(class_name(k));
    out["class_families"] = std::move(fam);
  }
  out["phi"] = phi_json(phi(g));
  return out;
}

json isotropy_json(const IsotropySet& s) {
  json out = class_set_json(s.set);
  out["cotorally_closed"] = s.cotorally_closed;
  return out;
}

semifree::WideSphere load_wide_sphere(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Errc::MalformedDescriptor, std::string("bad JSON: ") + e.what());
  }
  semifree::WideSphere w = wide_sphere_from_json(j);
  semifree::ValidationResult r = semifree::validate(w);
  if (!r.ok) fail(Errc::MalformedDescriptor, "not a wide sphere: " + r.reason);
  return semifree::canonicalize(std::move(w));
}

RatVec parse_coeffs(const std::string& text) {
  RatVec out;
  std::string cur;
  std::stringstream ss(text);
  while (std::getline(ss, cur, ',')) {
    std::string trimmed;
    for (char c : cur)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (!trimmed.empty()) out.push_back(parse_rat(trimmed));
  }
  return out;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ttg-spectra: Balmer spectra, Burnside rings and the semifree circle model"};
  app.require_subcommand(1);

  std::string group_flag, file_flag, file2_flag, poly_flag, coeffs_flag, class_flag;
  int bound = 8, nflag = 0, kflag = 0;
  std::vector<std::string> args;

  int rc = 0;
  auto guard = [&rc](auto fn) {
    return [&rc, fn]() {
      try {
        fn();
      } catch (const Error& e) {
        json err;
        err["error"]["code"] = errc_name(e.code);
        err["error"]["message"] = e.what();
        emit(err);
        rc = 1;
      }
    };
  };

  // group load | info | subgroups
  auto* group = app.add_subcommand("group", "group catalogue queries");
  group->require_subcommand(1);
  auto* gload = group->add_subcommand("load", "load and validate a finite group table");
  gload->add_option("--group", group_flag)->required();
  gload->callback(guard([&] { emit(group_info_json(group_from_flag(group_flag))); }));
  auto* ginfo = group->add_subcommand("info", "class families and Phi structure");
  ginfo->add_option("--group", group_flag)->required();
  ginfo->callback(guard([&] { emit(group_info_json(group_from_flag(group_flag))); }));
  auto* gsub = group->add_subcommand("subgroups", "list subgroup classes up to a series bound");
  gsub->add_option("--group", group_flag)->required();
  gsub->add_option("--bound", bound);
  gsub->callback(guard([&] {
    GroupId g = group_from_flag(group_flag);
    json names = json::array();
    for (SubgroupClass k : classes(g, bound)) names.push_back(class_name(k));
    json out;
    out["classes"] = std::move(names);
    emit(out);
  }));

  auto* cot = app.add_subcommand("cotoral", "is L cotoral in K");
  cot->add_option("--group", group_flag)->required();
  cot->add_option("args", args)->expected(2);
  cot->callback(guard([&] {
    GroupId g = group_from_flag(group_flag);
    json out;
    out["cotoral"] = is_cotoral(g, parse_class(g, args[0]), parse_class(g, args[1]));
    emit(out);
  }));

  auto* sub = app.add_subcommand("subconj", "is L subconjugate to K");
  sub->add_option("--group", group_flag)->required();
  sub->add_option("args", args)->expected(2);
  sub->callback(guard([&] {
    GroupId g = group_from_flag(group_flag);
    json out;
    out["subconjugate"] = is_subconjugate(g, parse_class(g, args[0]), parse_class(g, args[1]));
    emit(out);
  }));

  auto* res = app.add_subcommand("restrict", "decompose a class under restriction to H");
  res->add_option("--group", group_flag)->required();
  res->add_option("args", args)->expected(2);
  res->callback(guard([&] {
    GroupId g = group_from_flag(group_flag);
    RestrictResult r = restrict_class(g, parse_class(g, args[0]), parse_class(g, args[1]));
    json out;
    out["model"] = group_name(r.model);
    json parts = json::array();
    for (SubgroupClass k : r.parts) parts.push_back(class_name(k));
    out["classes"] = std::move(parts);
    emit(out);
  }));

  auto* phis = app.add_subcommand("phi", "the space of finite-Weyl classes");
  phis->require_subcommand(1);
  auto* phishow = phis->add_subcommand("show", "components of Phi G");
  phishow->add_option("--group", group_flag)->required();
  phishow->callback(guard([&] { emit(phi_json(phi(group_from_flag(group_flag)))); }));

  auto* clopen = app.add_subcommand("clopen", "Boolean algebra of clopen subsets of Phi G");
  clopen->require_subcommand(1);
  for (const std::string opname : {"union", "intersect", "complement"}) {
    auto* op = clopen->add_subcommand(opname, opname + " of clopen sets");
    op->add_option("--group", group_flag)->required();
    op->add_option("args", args)->expected(opname == "complement" ? 1 : 2);
    op->callback(guard([&, opname] {
      GroupId g = group_from_flag(group_flag);
      PhiSpace space = phi(g);
      ClopenSet a = make_clopen(space, parse_class_set(g, args[0]));
      ClopenSet r = a;
      if (opname == "union")
        r = clopen_union(a, make_clopen(space, parse_class_set(g, args[1])));
      else if (opname == "intersect")
        r = clopen_intersect(a, make_clopen(space, parse_class_set(g, args[1])));
      else
        r = clopen_complement(a);
      emit(clopen_json(r));
    }));
  }

  auto* burn = app.add_subcommand("burnside", "rational Burnside ring of a finite group");
  burn->require_subcommand(1);
  auto* bmarks = burn->add_subcommand("marks", "table of marks");
  bmarks->add_option("--group", group_flag)->required();
  bmarks->callback(guard([&] { emit(marks_json(marks_matrix(group_from_flag(group_flag)))); }));
  auto* bidem = burn->add_subcommand("idempotent", "primitive idempotent at a class");
  bidem->add_option("--group", group_flag)->required();
  bidem->add_option("class", class_flag)->required();
  bidem->callback(guard([&] {
    GroupId g = group_from_flag(group_flag);
    RatVec e = primitive_idempotent(g, parse_class(g, class_flag));
    json coeffs = json::array();
    for (const Rat& c : e) coeffs.push_back(rat_str(c));
    json basis = json::array();
    for (SubgroupClass k : marks_matrix(g).basis) basis.push_back(class_name(k));
    json out;
    out["basis"] = std::move(basis);
    out["coefficients"] = std::move(coeffs);
    emit(out);
  }));
  auto* beval = burn->add_subcommand("eval", "mark of a transitive-basis vector at a class");
  beval->add_option("--group", group_flag)->required();
  beval->add_option("--coeffs", coeffs_flag)->required();
  beval->add_option("class", class_flag)->required();
  beval->callback(guard([&] {
    GroupId g = group_from_flag(group_flag);
    json out;
    out["mark"] = rat_str(mark_of(g, parse_coeffs(coeffs_flag), parse_class(g, class_flag)));
    emit(out);
  }));

  auto* supp = app.add_subcommand("support", "geometric isotropy of an expression");
  supp->add_option("--group", group_flag)->required();
  supp->add_option("expr", file_flag)->required();
  supp->callback(guard([&] {
    GroupId g = group_from_flag(group_flag);
    emit(isotropy_json(support(g, parse_expr(g, file_flag))));
  }));

  auto* ctm = app.add_subcommand("ctmax", "cotorally maximal part of an expression's support");
  ctm->add_option("--group", group_flag)->required();
  ctm->add_option("expr", file_flag)->required();
  ctm->callback(guard([&] {
    GroupId g = group_from_flag(group_flag);
    emit(class_set_json(ctmax(support(g, parse_expr(g, file_flag)).set)));
  }));

  auto* rz = app.add_subcommand("realizable", "is the set the support of a finite spectrum");
  rz->add_option("--group", group_flag)->required();
  rz->add_option("set", file_flag)->required();
  rz->callback(guard([&] {
    GroupId g = group_from_flag(group_flag);
    json out;
    out["realizable"] = is_realizable(parse_class_set(g, file_flag));
    emit(out);
  }));

  auto* re = app.add_subcommand("realize", "a wedge of basic cells with the given support");
  re->add_option("--group", group_flag)->required();
  re->add_option("set", file_flag)->required();
  re->callback(guard([&] {
    GroupId g = group_from_flag(group_flag);
    ClassSet s = parse_class_set(g, file_flag);
    ExprPtr e = realize(g, s);
    json out;
    out["expr"] = expr_str(e);
    out["support"] = class_set_json(support(g, e).set);
    emit(out);
  }));

  auto* th = app.add_subcommand("thickt", "membership in the thick tensor ideal of X");
  th->add_option("--group", group_flag)->required();
  th->add_option("args", args)->expected(2);
  th->callback(guard([&] {
    GroupId g = group_from_flag(group_flag);
    json out;
    out["in_thickt"] = in_thickt(g, parse_expr(g, args[0]), parse_expr(g, args[1]));
    emit(out);
  }));

  auto* le = app.add_subcommand("loct-eq", "equality of localizing tensor ideals");
  le->add_option("--group", group_flag)->required();
  le->add_option("args", args)->expected(2);
  le->callback(guard([&] {
    GroupId g = group_from_flag(group_flag);
    json out;
    out["equal"] = loct_equal(g, parse_expr(g, args[0]), parse_expr(g, args[1]));
    emit(out);
  }));

  auto* clo = app.add_subcommand("closure", "Zariski closure of a class set");
  clo->add_option("--group", group_flag)->required();
  clo->add_option("set", file_flag)->required();
  clo->callback(guard([&] {
    GroupId g = group_from_flag(group_flag);
    ClassSet s = parse_class_set(g, file_flag);
    json out;
    out["closed"] = is_zariski_closed(s);
    out["closure"] = class_set_json(zariski_closure(s));
    emit(out);
  }));

  auto* sep = app.add_subcommand("separate", "finite complexes with disjoint supports");
  sep->add_option("--group", group_flag)->required();
  sep->add_option("args", args)->expected(2);
  sep->callback(guard([&] {
    GroupId g = group_from_flag(group_flag);
    auto [x1, x2] = separate(g, parse_class(g, args[0]), parse_class(g, args[1]));
    json out;
    out["first"] = expr_str(x1);
    out["second"] = expr_str(x2);
    emit(out);
  }));

  auto* balmer = app.add_subcommand("balmer", "the Balmer spectrum as a poset");
  balmer->require_subcommand(1);
  auto* bleq = balmer->add_subcommand("leq", "containment of primes");
  bleq->add_option("--group", group_flag)->required();
  bleq->add_option("args", args)->expected(2);
  bleq->callback(guard([&] {
    GroupId g = group_from_flag(group_flag);
    json out;
    out["leq"] = prime_leq({g, parse_class(g, args[0])}, {g, parse_class(g, args[1])});
    emit(out);
  }));

  auto* sf = app.add_subcommand("semifree", "the algebraic model of semifree circle spectra");
  sf->require_subcommand(1);
  auto* sfcheck = sf->add_subcommand("check", "validate a wide sphere and report its invariants");
  sfcheck->add_option("--file", file_flag)->required();
  sfcheck->callback(guard([&] {
    std::ifstream in(file_flag);
    if (!in) fail(Errc::IoError, "cannot open " + file_flag);
    json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      fail(Errc::MalformedDescriptor, std::string("bad JSON: ") + e.what());
    }
    semifree::WideSphere w = wide_sphere_from_json(j);
    semifree::ValidationResult v = semifree::validate(w);
    json out;
    out["wide_sphere"] = v.ok;
    if (!v.ok) {
      out["reason"] = v.reason;
      emit(out);
      return;
    }
    w = semifree::canonicalize(std::move(w));
    out["untwisted"] = semifree::is_untwisted(w);
    out["p_fixed"] = semifree::laurent_str(semifree::p_fixed(w));
    out["p_borel"] = semifree::laurent_str(semifree::p_borel_jump(w));
    emit(out);
  }));
  auto* sfclasses = sf->add_subcommand("classes", "wide spheres with p_1 = p_T = p");
  sfclasses->add_option("--poly", poly_flag)->required();
  sfclasses->callback(guard([&] {
    auto reps = semifree::enumerate_classes(semifree::parse_laurent(poly_flag));
    json list = json::array();
    for (const auto& w : reps) {
      json e;
      e["model"] = wide_sphere_json(w);
      e["untwisted"] = semifree::is_untwisted(w);
      list.push_back(std::move(e));
    }
    json out;
    out["count"] = reps.size();
    out["classes"] = std::move(list);
    emit(out);
  }));
  auto* sfattach = sf->add_subcommand("attach", "cofibre of a sphere attachment");
  sfattach->add_option("--file", file_flag)->required();
  sfattach->add_option("--n", nflag)->required();
  sfattach->add_option("--class", class_flag)->required();
  sfattach->callback(guard([&] {
    semifree::WideSphere w = load_wide_sphere(file_flag);
    semifree::WideSphere y = semifree::attach_cell(w, nflag, parse_coeffs(class_flag));
    emit(wide_sphere_json(y));
  }));
  auto* sftwist = sf->add_subcommand("twist", "membership in the thick subcategory of S^{kz}");
  sftwist->add_option("--file", file_flag)->required();
  sftwist->add_option("--k", kflag)->required();
  sftwist->callback(guard([&] {
    semifree::WideSphere w = load_wide_sphere(file_flag);
    json out;
    out["k"] = kflag;
    out["k_twisted"] = semifree::is_k_twisted(w, kflag);
    emit(out);
  }));
  auto* sfiso = sf->add_subcommand("iso", "isomorphism of wide spheres");
  sfiso->add_option("--file", file_flag)->required();
  sfiso->add_option("--file2", file2_flag)->required();
  sfiso->callback(guard([&] {
    json out;
    out["isomorphic"] =
        semifree::is_isomorphic(load_wide_sphere(file_flag), load_wide_sphere(file2_flag));
    emit(out);
  }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}
