#include "galgrp/json_io.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace galgrp {

namespace {

constexpr long long kMaxJsonInt = 9007199254740992LL; // 2^53, safe in every reader

} // namespace

OrderedJson int_to_json(const Int &value) {
  if (value >= -Int(kMaxJsonInt) && value <= Int(kMaxJsonInt))
    return value.convert_to<long long>();
  return value.str();
}

Int int_from_json(const OrderedJson &j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

OrderedJson to_json(const FgAbelianGroup &a) {
  OrderedJson torsion = OrderedJson::array();
  for (const Int &d : a.torsion()) torsion.push_back(int_to_json(d));
  return OrderedJson{{"torsion", torsion}, {"rank", a.free_rank()}};
}

FgAbelianGroup abelian_from_json(const OrderedJson &j) {
  std::vector<Int> torsion;
  for (const auto &d : j.at("torsion")) torsion.push_back(int_from_json(d));
  return FgAbelianGroup::from_factors(std::move(torsion), j.at("rank").get<std::size_t>());
}

OrderedJson to_json(const GroupDescriptor &d) {
  switch (d.kind) {
  case GroupDescriptor::Kind::Abelian: {
    OrderedJson body = to_json(*d.abelian);
    return OrderedJson{
        {"kind", "abelian"}, {"torsion", body.at("torsion")}, {"rank", body.at("rank")}};
  }
  case GroupDescriptor::Kind::Extension: {
    OrderedJson out{{"kind", "extension"},
                    {"kernel", to_json(*d.kernel)},
                    {"quotient", to_json(*d.quotient)},
                    {"central", d.central}};
    if (d.split) out.emplace("split", *d.split);
    if (d.known_abelianization) out.emplace("abelianization", to_json(*d.known_abelianization));
    return out;
  }
  case GroupDescriptor::Kind::SurfaceGroup:
    return OrderedJson{{"kind", "surface_group"}, {"genus", d.genus}};
  case GroupDescriptor::Kind::KGroup: {
    OrderedJson out{{"kind", "k_group"}, {"base", to_json(*d.base)}, {"n", d.kgroup_n}};
    if (d.known_abelianization) out.emplace("abelianization", to_json(*d.known_abelianization));
    return out;
  }
  }
  throw std::logic_error("unreachable");
}

GroupDescriptor descriptor_from_json(const OrderedJson &j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "abelian") return GroupDescriptor::make_abelian(abelian_from_json(j));
  if (kind == "extension") {
    std::optional<bool> split;
    if (j.contains("split")) split = j.at("split").get<bool>();
    std::optional<FgAbelianGroup> ab;
    if (j.contains("abelianization")) ab = abelian_from_json(j.at("abelianization"));
    return GroupDescriptor::make_extension(descriptor_from_json(j.at("kernel")),
                                           descriptor_from_json(j.at("quotient")),
                                           j.at("central").get<bool>(), split, std::move(ab));
  }
  if (kind == "surface_group")
    return GroupDescriptor::make_surface_group(j.at("genus").get<long long>());
  if (kind == "k_group") {
    std::optional<FgAbelianGroup> ab;
    if (j.contains("abelianization")) ab = abelian_from_json(j.at("abelianization"));
    return GroupDescriptor::make_k_group(descriptor_from_json(j.at("base")),
                                         j.at("n").get<long long>(), std::move(ab));
  }
  throw std::invalid_argument("unknown group descriptor kind: " + kind);
}

OrderedJson to_json(const ExtensionTower &t) {
  OrderedJson layers = OrderedJson::array();
  for (const auto &layer : t.layers) {
    OrderedJson l{{"label", layer.label}, {"group", to_json(layer.group)}};
    if (layer.note) l.emplace("note", *layer.note);
    layers.push_back(std::move(l));
  }
  OrderedJson out{{"kind", "tower"}, {"layers", layers}};
  if (t.note) out.emplace("note", *t.note);
  return out;
}

ExtensionTower tower_from_json(const OrderedJson &j) {
  ExtensionTower t;
  for (const auto &l : j.at("layers")) {
    ExtensionTower::Layer layer;
    layer.label = l.at("label").get<std::string>();
    layer.group = descriptor_from_json(l.at("group"));
    if (l.contains("note")) layer.note = l.at("note").get<std::string>();
    t.layers.push_back(std::move(layer));
  }
  if (j.contains("note")) t.note = j.at("note").get<std::string>();
  return t;
}

OrderedJson to_json(const ProjectiveGroup &p) {
  if (const auto *d = std::get_if<GroupDescriptor>(&p)) return to_json(*d);
  return to_json(std::get<ExtensionTower>(p));
}

ProjectiveGroup projective_from_json(const OrderedJson &j) {
  if (j.at("kind").get<std::string>() == "tower") return tower_from_json(j);
  return descriptor_from_json(j);
}

namespace {

OrderedJson params_to_json(const SurfaceSpec &s) {
  switch (s.family) {
  case SurfaceSpec::Family::ProjectivePlane: return OrderedJson{{"k", s.k}};
  case SurfaceSpec::Family::Quadric: return OrderedJson{{"a", s.a}, {"b", s.b}};
  case SurfaceSpec::Family::Hirzebruch:
    return OrderedJson{{"e", s.e}, {"a", s.a}, {"b", s.b}};
  case SurfaceSpec::Family::CurveCrossLine:
    return OrderedJson{{"g", s.g}, {"d", s.d}, {"k", s.k}};
  case SurfaceSpec::Family::Custom: return OrderedJson{{"n", s.n}, {"div", s.div}};
  }
  throw std::logic_error("unreachable");
}

SurfaceSpec spec_from_json(const std::string &family, const OrderedJson &params) {
  if (family == "p2") return SurfaceSpec::projective_plane(params.at("k").get<long long>());
  if (family == "quadric")
    return SurfaceSpec::quadric(params.at("a").get<long long>(), params.at("b").get<long long>());
  if (family == "hirzebruch")
    return SurfaceSpec::hirzebruch(params.at("e").get<long long>(),
                                   params.at("a").get<long long>(),
                                   params.at("b").get<long long>());
  if (family == "cxp1")
    return SurfaceSpec::curve_cross_line(params.at("g").get<long long>(),
                                         params.at("d").get<long long>(),
                                         params.at("k").get<long long>());
  if (family == "custom")
    return SurfaceSpec::custom(params.at("n").get<long long>(), params.at("div").get<long long>());
  throw std::invalid_argument("unknown surface family: " + family);
}

} // namespace

OrderedJson to_json(const StructureReport &r) {
  return OrderedJson{{"family", r.spec.family_id()},
                     {"params", params_to_json(r.spec)},
                     {"degree", int_to_json(r.degree_n)},
                     {"divisibility", int_to_json(r.divisibility)},
                     {"affine_pi1", to_json(r.affine_pi1)},
                     {"affine_galois", to_json(r.affine_galois_pi1)},
                     {"projective_galois", to_json(r.projective_galois_pi1)},
                     {"h1_galois", to_json(r.h1_galois)},
                     {"h1_affine_galois", to_json(r.h1_affine_galois)},
                     {"assumptions", r.assumptions}};
}

StructureReport report_from_json(const OrderedJson &j) {
  StructureReport r;
  r.spec = spec_from_json(j.at("family").get<std::string>(), j.at("params"));
  r.degree_n = int_from_json(j.at("degree"));
  r.divisibility = int_from_json(j.at("divisibility"));
  r.affine_pi1 = descriptor_from_json(j.at("affine_pi1"));
  r.affine_galois_pi1 = descriptor_from_json(j.at("affine_galois"));
  r.projective_galois_pi1 = projective_from_json(j.at("projective_galois"));
  r.h1_galois = abelian_from_json(j.at("h1_galois"));
  r.h1_affine_galois = abelian_from_json(j.at("h1_affine_galois"));
  r.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  r.warnings = r.spec.warnings();
  return r;
}

OrderedJson to_json(const KTildeDescriptor &d) {
  OrderedJson out{{"base", to_json(d.base_group)},
                  {"n", d.n},
                  {"h2", to_json(d.h2)},
                  {"k_part", to_json(d.k_part)},
                  {"abelianization", to_json(d.abelianization)},
                  {"order", d.order ? OrderedJson(int_to_json(*d.order)) : OrderedJson("infinite")}};
  if (d.exact_iso) out.emplace("exact_iso", to_json(*d.exact_iso));
  return out;
}

KTildeDescriptor ktilde_from_json(const OrderedJson &j) {
  KTildeDescriptor d;
  d.base_group = abelian_from_json(j.at("base"));
  d.n = j.at("n").get<int>();
  d.h2 = abelian_from_json(j.at("h2"));
  d.k_part = abelian_from_json(j.at("k_part"));
  d.abelianization = abelian_from_json(j.at("abelianization"));
  const auto &order = j.at("order");
  if (!(order.is_string() && order.get<std::string>() == "infinite"))
    d.order = int_from_json(order);
  if (j.contains("exact_iso")) d.exact_iso = abelian_from_json(j.at("exact_iso"));
  return d;
}

OrderedJson to_json(const VerificationReport &r) {
  OrderedJson failures = OrderedJson::array();
  for (const auto &f : r.failures)
    failures.push_back(OrderedJson{{"relator", f.relator}, {"image", f.image}});
  return OrderedJson{{"n", r.n},
                     {"d", r.d},
                     {"relator_count", r.relator_count},
                     {"failures", failures},
                     {"all_identity", r.all_identity}};
}

VerificationReport verification_from_json(const OrderedJson &j) {
  VerificationReport r;
  r.n = j.at("n").get<int>();
  r.d = j.at("d").get<int>();
  r.relator_count = j.at("relator_count").get<std::size_t>();
  std::size_t index = 0;
  for (const auto &f : j.at("failures"))
    r.failures.push_back(
        {index++, f.at("relator").get<std::string>(), f.at("image").get<std::string>()});
  r.all_identity = j.at("all_identity").get<bool>();
  return r;
}

std::string format_group(const FgAbelianGroup &a) {
  if (a.is_trivial()) return "1";
  std::ostringstream out;
  bool first = true;
  const auto &t = a.torsion();
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i;
    while (j < t.size() && t[j] == t[i]) ++j;
    if (!first) out << " + ";
    first = false;
    std::size_t count = j - i;
    if (count == 1)
      out << "Z/" << t[i].str();
    else
      out << "(Z/" << t[i].str() << ")^" << count;
    i = j;
  }
  if (a.free_rank() > 0) {
    if (!first) out << " + ";
    if (a.free_rank() == 1)
      out << "Z";
    else
      out << "Z^" << a.free_rank();
  }
  return out.str();
}

std::string format_group(const GroupDescriptor &d) {
  switch (d.kind) {
  case GroupDescriptor::Kind::Abelian: return format_group(*d.abelian);
  case GroupDescriptor::Kind::Extension: {
    std::string out = d.central ? "central extension" : "extension";
    GroupDescriptor quot = *d.quotient;
    if (quot.kind != GroupDescriptor::Kind::Abelian &&
        quot.known_abelianization == d.known_abelianization)
      quot.known_abelianization.reset(); // avoid repeating the clause
    out += " of " + format_group(quot) + " by " + format_group(*d.kernel);
    if (d.split && *d.split) out += " (split)";
    if (d.known_abelianization)
      out += ", abelianization " + format_group(*d.known_abelianization);
    return out;
  }
  case GroupDescriptor::Kind::SurfaceGroup:
    return "pi1(genus-" + std::to_string(d.genus) + " curve)";
  case GroupDescriptor::Kind::KGroup: {
    GroupDescriptor brief_base = *d.base; // drop nested abelianization clauses
    brief_base.known_abelianization.reset();
    if (brief_base.kind == GroupDescriptor::Kind::Abelian)
      brief_base.known_abelianization = brief_base.abelian;
    std::string out = "K(" + format_group(brief_base) + ", " + std::to_string(d.kgroup_n) + ")";
    if (d.known_abelianization)
      out += " with abelianization " + format_group(*d.known_abelianization);
    return out;
  }
  }
  throw std::logic_error("unreachable");
}

std::string format_group(const ProjectiveGroup &p) {
  if (const auto *d = std::get_if<GroupDescriptor>(&p)) return format_group(*d);
  return "extension tower:\n" + format_tower(std::get<ExtensionTower>(p));
}

std::string format_tower(const ExtensionTower &t, const std::string &indent) {
  std::ostringstream out;
  for (const auto &layer : t.layers) {
    out << indent << layer.label << ": " << format_group(layer.group);
    if (layer.note) out << "  [" << *layer.note << "]";
    out << '\n';
  }
  if (t.note) out << indent << "note: " << *t.note << '\n';
  std::string s = out.str();
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

std::string format_report_text(const StructureReport &r, bool caff_known_trivial) {
  std::ostringstream out;
  const char *aff_label = caff_known_trivial ? "pi1(Xgal^aff)" : "pi1(Xgal^aff)/C^aff";
  const char *proj_label = caff_known_trivial ? "pi1(Xgal)" : "pi1(Xgal)/C^proj";
  const char *h1_label = caff_known_trivial ? "H1(Xgal)" : "H1(Xgal)/C^proj";
  const char *h1aff_label = caff_known_trivial ? "H1(Xgal^aff)" : "H1(Xgal^aff)/C^aff";
  out << "family: " << r.spec.family_id() << '\n';
  out << "degree n: " << r.degree_n.str() << '\n';
  out << "divisibility index: " << r.divisibility.str() << '\n';
  out << "pi1(X^aff): " << format_group(r.affine_pi1) << '\n';
  out << aff_label << ": " << format_group(r.affine_galois_pi1) << '\n';
  out << proj_label << ": " << format_group(r.projective_galois_pi1) << '\n';
  out << h1_label << ": " << format_group(r.h1_galois) << '\n';
  out << h1aff_label << ": " << format_group(r.h1_affine_galois) << '\n';
  for (const auto &a : r.assumptions) out << "assumption: " << a << '\n';
  for (const auto &w : r.warnings) out << "warning: " << w << '\n';
  std::string s = out.str();
  s.pop_back();
  return s;
}

std::string format_ktilde_text(const KTildeDescriptor &d) {
  std::ostringstream out;
  out << "base G: " << format_group(d.base_group) << ", n = " << d.n << '\n';
  out << "H2(G): " << format_group(d.h2) << '\n';
  out << "K(G,n): " << format_group(d.k_part) << '\n';
  out << "abelianization: " << format_group(d.abelianization) << '\n';
  out << "order: " << (d.order ? d.order->str() : std::string("infinite")) << '\n';
  if (d.exact_iso)
    out << "exact structure (cyclic base): " << format_group(*d.exact_iso) << '\n';
  else
    out << "structure: central extension of K(G,n) by H2(G)\n";
  std::string s = out.str();
  s.pop_back();
  return s;
}

std::string format_verification_text(const VerificationReport &r) {
  std::ostringstream out;
  out << "n = " << r.n << ", d = " << r.d << ": " << r.failures.size() << " failures / "
      << r.relator_count << " relators";
  for (const auto &f : r.failures)
    out << "\n  relator " << f.relator << " -> " << f.image;
  return out.str();
}

} // namespace galgrp
