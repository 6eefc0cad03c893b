#include "galgrp/errors.hpp"
#include "galgrp/json_io.hpp"
#include "galgrp/kernel_constructions.hpp"
#include "galgrp/perm_group.hpp"
#include "galgrp/surface_calculator.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace galgrp;

constexpr int kExitOk = 0;
constexpr int kExitComputeError = 1;
constexpr int kExitUsageError = 2;

struct OutputOptions {
  bool json = false;
  std::string out_file;
};

void add_output_flags(CLI::App *cmd, OutputOptions &opts) {
  cmd->add_flag("--json", opts.json, "emit JSON instead of text");
  cmd->add_option("--out", opts.out_file, "write output to a file instead of stdout");
}

void emit(const OutputOptions &opts, const std::string &text) {
  if (opts.out_file.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(opts.out_file);
  if (!f) throw std::runtime_error("cannot open output file: " + opts.out_file);
  f << text << '\n';
}

// --- group construction flags shared by kgroup / recover --------------------

struct GroupFlags {
  long long cyclic = 0;
  long long dihedral = 0;
  long long sym = 0;
  bool q8 = false;
  bool klein4 = false;
  std::string gens;
  long long degree = 0;
  std::size_t cap = kDefaultElementCap;
};

void add_group_flags(CLI::App *cmd, GroupFlags &flags) {
  cmd->add_option("--cyclic", flags.cyclic, "cyclic group Z/N");
  cmd->add_option("--dihedral", flags.dihedral, "dihedral group of order 2N");
  cmd->add_option("--sym", flags.sym, "symmetric group on N letters");
  cmd->add_flag("--q8", flags.q8, "quaternion group of order 8");
  cmd->add_flag("--klein4", flags.klein4, "Klein four-group");
  cmd->add_option("--gens", flags.gens,
                  "comma-separated permutation generators in cycle notation, e.g. "
                  "\"(1 2),(1 2 3)\"");
  cmd->add_option("--degree", flags.degree, "degree for --gens (default: largest point)");
  cmd->add_option("--cap", flags.cap, "element cap for enumerations");
}

PermGroup build_group(const GroupFlags &flags) {
  int picked = (flags.cyclic > 0) + (flags.dihedral > 0) + (flags.sym > 0) + flags.q8 +
               flags.klein4 + !flags.gens.empty();
  if (picked != 1)
    throw CLI::ValidationError(
        "group", "pick exactly one of --cyclic/--dihedral/--sym/--q8/--klein4/--gens");

  PermGroup g = [&]() -> PermGroup {
    if (flags.cyclic > 0) return cyclic_group(static_cast<std::size_t>(flags.cyclic));
    if (flags.dihedral > 0) return dihedral_group(static_cast<std::size_t>(flags.dihedral));
    if (flags.sym > 0) return symmetric_group(static_cast<std::size_t>(flags.sym));
    if (flags.q8) return quaternion_group();
    if (flags.klein4) return klein_four_group();

    std::vector<Perm> gens;
    std::size_t max_degree = static_cast<std::size_t>(std::max<long long>(flags.degree, 0));
    std::vector<std::string> parts;
    std::string current;
    int depth = 0;
    for (char c : flags.gens) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        parts.push_back(current);
        current.clear();
      } else {
        current += c;
      }
    }
    if (!current.empty()) parts.push_back(current);
    for (const std::string &p : parts) gens.push_back(Perm::parse(p));
    for (const Perm &p : gens) max_degree = std::max(max_degree, p.degree());
    for (Perm &p : gens) p = p.extended(max_degree);
    return PermGroup(max_degree, std::move(gens));
  }();
  return PermGroup(g.degree(), g.generators(), flags.cap);
}

// --- subcommand handlers -----------------------------------------------------

int run_surface(const SurfaceSpec &spec, bool known_trivial, const OutputOptions &opts) {
  StructureReport report = analyze_surface(spec, known_trivial);
  for (const std::string &w : report.warnings) std::cerr << "warning: " << w << '\n';
  if (opts.json)
    emit(opts, to_json(report).dump(2));
  else
    emit(opts, format_report_text(report, known_trivial));
  return kExitOk;
}

int run_kgroup(const GroupFlags &flags, int n, const OutputOptions &opts) {
  PermGroup g = build_group(flags);
  KGroupRealization k = k_group_finite(g, n);
  FgAbelianGroup kab = abelianization(k.group);
  OrderedJson j{{"n", n},
                {"base_order", int_to_json(k.base_order)},
                {"base_abelianization", to_json(k.base_abelianization)},
                {"order", int_to_json(Int(k.group.order()))},
                {"abelianization", to_json(kab)}};
  if (opts.json) {
    emit(opts, j.dump(2));
  } else {
    std::ostringstream out;
    out << "|G| = " << k.base_order.str() << ", G^ab = " << format_group(k.base_abelianization)
        << '\n';
    out << "|K(G," << n << ")| = " << k.group.order() << '\n';
    out << "K(G," << n << ")^ab = " << format_group(kab);
    emit(opts, out.str());
  }
  return kExitOk;
}

int run_recover(const GroupFlags &flags, int n, const OutputOptions &opts) {
  PermGroup g = build_group(flags);
  PermGroup q = recover_quotient(g, n);
  FgAbelianGroup gab = abelianization(g);
  FgAbelianGroup qab = abelianization(q);
  bool order_match = q.order() == g.order();
  bool ab_match = gab == qab;
  bool exponent_match = q.exponent() == g.exponent();
  OrderedJson j{{"n", n},
                {"group_order", g.order()},
                {"quotient_order", q.order()},
                {"abelianization", to_json(qab)},
                {"order_match", order_match},
                {"abelianization_match", ab_match},
                {"exponent_match", exponent_match}};
  if (opts.json) {
    emit(opts, j.dump(2));
  } else {
    std::ostringstream out;
    out << "K(G," << n << ") / [K, S_" << n - 1 << "]: order " << q.order() << ", abelianization "
        << format_group(qab) << '\n';
    out << "matches G: order " << (order_match ? "yes" : "NO") << ", abelianization "
        << (ab_match ? "yes" : "NO") << ", exponent " << (exponent_match ? "yes" : "NO");
    emit(opts, out.str());
  }
  return order_match && ab_match && exponent_match ? kExitOk : kExitComputeError;
}

int run_ktilde(const std::string &torsion_csv, long long rank, int n, const OutputOptions &opts) {
  std::vector<Int> torsion;
  std::stringstream ss(torsion_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    torsion.emplace_back(item);
  }
  FgAbelianGroup base =
      FgAbelianGroup::from_factors(std::move(torsion), static_cast<std::size_t>(rank));
  KTildeDescriptor d = ktilde_structure(base, n);
  emit(opts, opts.json ? to_json(d).dump(2) : format_ktilde_text(d));
  return kExitOk;
}

int run_verify_snd(int n, int d, bool allow_small, bool allow_large,
                   const OutputOptions &opts) {
  VerificationReport report = verify_phi_relators(n, d, allow_small, allow_large);
  emit(opts, opts.json ? to_json(report).dump(2) : format_verification_text(report));
  return report.all_identity ? kExitOk : kExitComputeError;
}

IntMatrix parse_matrix(const std::string &text) {
  std::vector<std::vector<Int>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<Int> entries;
    std::stringstream rs(row);
    std::string entry;
    while (std::getline(rs, entry, ',')) {
      std::size_t from = entry.find_first_not_of(" \t");
      std::size_t to = entry.find_last_not_of(" \t");
      if (from == std::string::npos) throw std::invalid_argument("empty matrix entry");
      entries.emplace_back(entry.substr(from, to - from + 1));
    }
    rows.push_back(std::move(entries));
  }
  return IntMatrix::from_rows(rows);
}

OrderedJson matrix_to_json(const IntMatrix &m) {
  OrderedJson rows = OrderedJson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_snf(const std::string &matrix_text, const OutputOptions &opts) {
  IntMatrix m = parse_matrix(matrix_text);
  SmithDecomposition d = smith_normal_form(m);
  if (opts.json) {
    OrderedJson j{{"u", matrix_to_json(d.u)},
                  {"s", matrix_to_json(d.s)},
                  {"v", matrix_to_json(d.v)}};
    emit(opts, j.dump(2));
  } else {
    std::string diag;
    for (const Int &e : d.diagonal()) {
      if (!diag.empty()) diag += ",";
      diag += e.str();
    }
    emit(opts, "diag(" + diag + ")");
  }
  return kExitOk;
}

int run_kappa(long long d, long long target, long long m, const OutputOptions &opts) {
  FgAbelianGroup kernel = kappa_kernel(Int(d), Int(target), static_cast<std::size_t>(m));
  if (opts.json) {
    OrderedJson j{{"d", d},
                  {"target", target},
                  {"m", m},
                  {"kernel", to_json(kernel)},
                  {"order", kernel.order() ? OrderedJson(int_to_json(*kernel.order()))
                                           : OrderedJson("infinite")}};
    emit(opts, j.dump(2));
  } else {
    emit(opts, "ker kappa_" + std::to_string(m) + " = " + format_group(kernel));
  }
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"computations around product kernels of groups and fundamental "
               "groups of Galois closures of generic projections"};
  app.require_subcommand(1);

  // surface
  auto *surface = app.add_subcommand("surface", "closed-form structure report for a surface family");
  std::string family;
  surface->add_option("--family", family, "p2 | quadric | hirzebruch | cxp1 | custom")->required();
  long long f_k = 0, f_a = 0, f_b = 0, f_e = 0, f_g = 0, f_d = 0, f_n = 0, f_div = 0;
  surface->add_option("--k", f_k, "bundle degree (p2) / curve bundle degree (cxp1)");
  surface->add_option("--a", f_a, "first bidegree (quadric, hirzebruch)");
  surface->add_option("--b", f_b, "second bidegree (quadric, hirzebruch)");
  surface->add_option("--e", f_e, "Hirzebruch index");
  surface->add_option("--g", f_g, "curve genus (cxp1)");
  surface->add_option("--d", f_d, "line factor degree (cxp1)");
  surface->add_option("--n", f_n, "projection degree (custom)");
  surface->add_option("--div", f_div, "divisibility index (custom)");
  bool known_trivial = false;
  surface->add_flag("--known-trivial-caff", known_trivial,
                    "report the fundamental groups themselves (externally verified "
                    "trivial relation subgroup) instead of their quotients");
  OutputOptions surface_out;
  add_output_flags(surface, surface_out);

  // kgroup
  auto *kgroup = app.add_subcommand("kgroup", "product kernel K(G, n) of a finite group");
  GroupFlags kgroup_flags;
  int kgroup_n = 3;
  add_group_flags(kgroup, kgroup_flags);
  kgroup->add_option("--n", kgroup_n, "number of factors")->required();
  OutputOptions kgroup_out;
  add_output_flags(kgroup, kgroup_out);

  // ktilde
  auto *ktilde = app.add_subcommand(
      "ktilde", "structure of the central extension of H2(G) by K(G, n), abelian G");
  std::string ktilde_torsion;
  long long ktilde_rank = 0;
  int ktilde_n = 3;
  ktilde->add_option("--torsion", ktilde_torsion, "comma-separated torsion coefficients");
  ktilde->add_option("--rank", ktilde_rank, "free rank");
  ktilde->add_option("--n", ktilde_n, "number of factors")->required();
  OutputOptions ktilde_out;
  add_output_flags(ktilde, ktilde_out);

  // recover
  auto *recover = app.add_subcommand(
      "recover", "recover G as K(G,n) / [K(G,n), S_{n-1}] and check the isomorphism");
  GroupFlags recover_flags;
  int recover_n = 3;
  add_group_flags(recover, recover_flags);
  recover->add_option("--n", recover_n, "number of factors")->required();
  OutputOptions recover_out;
  add_output_flags(recover, recover_out);

  // verify-snd
  auto *verify = app.add_subcommand(
      "verify-snd", "verify that all relators of the layered presentation die in the "
                    "semidirect product of free-word tuples");
  int verify_n = 5, verify_d = 1;
  bool allow_small = false;
  bool allow_large = false;
  verify->add_option("--n", verify_n, "number of letters")->required();
  verify->add_option("--d", verify_d, "number of layer generators")->required();
  verify->add_flag("--allow-small-n", allow_small,
                   "run even for n < 5 (the isomorphism is not guaranteed there)");
  verify->add_flag("--allow-large-n", allow_large,
                   "lift the n <= 6 cap on the conjugator enumeration");
  OutputOptions verify_out;
  add_output_flags(verify, verify_out);

  // snf
  auto *snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  std::string matrix_text;
  snf->add_option("--matrix", matrix_text, "rows separated by ';', entries by ','")->required();
  OutputOptions snf_out;
  add_output_flags(snf, snf_out);

  // kappa
  auto *kappa = app.add_subcommand("kappa", "kernel of the reduction-sum map (Z/d)^m -> Z/t");
  long long kappa_d = 0, kappa_t = 0, kappa_m = 0;
  kappa->add_option("--d", kappa_d, "cyclic order d")->required();
  kappa->add_option("--target", kappa_t, "target order t (divides d)")->required();
  kappa->add_option("--m", kappa_m, "number of factors")->required();
  OutputOptions kappa_out;
  add_output_flags(kappa, kappa_out);

  try {
    app.parse(argc, argv);

    if (surface->parsed()) {
      SurfaceSpec spec;
      if (family == "p2") spec = SurfaceSpec::projective_plane(f_k);
      else if (family == "quadric") spec = SurfaceSpec::quadric(f_a, f_b);
      else if (family == "hirzebruch") spec = SurfaceSpec::hirzebruch(f_e, f_a, f_b);
      else if (family == "cxp1") spec = SurfaceSpec::curve_cross_line(f_g, f_d, f_k);
      else if (family == "custom") spec = SurfaceSpec::custom(f_n, f_div);
      else throw CLI::ValidationError("--family", "unknown family: " + family);
      return run_surface(spec, known_trivial, surface_out);
    }
    if (kgroup->parsed()) return run_kgroup(kgroup_flags, kgroup_n, kgroup_out);
    if (ktilde->parsed()) return run_ktilde(ktilde_torsion, ktilde_rank, ktilde_n, ktilde_out);
    if (recover->parsed()) return run_recover(recover_flags, recover_n, recover_out);
    if (verify->parsed())
      return run_verify_snd(verify_n, verify_d, allow_small, allow_large, verify_out);
    if (snf->parsed()) return run_snf(matrix_text, snf_out);
    if (kappa->parsed()) return run_kappa(kappa_d, kappa_t, kappa_m, kappa_out);
    return kExitUsageError;
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsageError;
  } catch (const CLI::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const galgrp::ParseError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComputeError; // cap exceeded, verification failure, internal errors
  }
}
