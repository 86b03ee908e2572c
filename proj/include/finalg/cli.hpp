#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "finalg/finalg.hpp"

namespace finalg::cli {

// Exit codes: 0 success / all checks pass, 1 mathematical failure with a
// counterexample printed, 2 malformed input or bad invocation.
inline constexpr int kOk = 0;
inline constexpr int kMathFailure = 1;
inline constexpr int kInputError = 2;

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline AlgebraTable load(const std::string& path) {
  return parse_algebra(read_file(path));
}

inline CheckReport check_by_signature(const AlgebraTable& a,
                                      CheckOptions opts = {}) {
  switch (a.signature.kind) {
    case SignatureKind::SH: return check_semi_heyting(a);
    case SignatureKind::H: return check_heyting(a);
    case SignatureKind::N: return check_nelson(a);
    case SignatureKind::SN: return check_semi_nelson(a, opts);
    case SignatureKind::DSH: return check_dsh(a);
    case SignatureKind::DSN: return check_dsn(a, opts);
    case SignatureKind::PCL: return check_pcl(a);
  }
  throw Error(ErrorKind::SignatureMismatch, "unsupported signature");
}

// Verifies the file's claimed variety before a construction that assumes
// it; on failure prints the broken axioms and reports a math failure.
inline bool precheck(const AlgebraTable& a, std::ostream& err) {
  CheckReport rep = check_by_signature(a);
  if (rep.passed()) return true;
  err << a.name << " is not a valid '" << to_string(a.signature.kind)
      << "' algebra:\n";
  for (const auto* f : rep.failures()) {
    static const char* kVars[] = {"x", "y", "z"};
    err << "FAIL " << f->label;
    for (size_t i = 0; i < f->witness.size(); ++i)
      err << " " << kVars[i] << "=" << f->witness[i];
    err << "\n";
  }
  return false;
}

inline nlohmann::ordered_json report_json(const AlgebraTable& a,
                                          const CheckReport& rep) {
  nlohmann::ordered_json doc;
  doc["algebra"] = a.name;
  doc["signature"] = to_string(a.signature.kind);
  doc["passed"] = rep.passed();
  doc["axioms"] = nlohmann::ordered_json::array();
  static const char* kVars[] = {"x", "y", "z"};
  for (const auto& ax : rep.axioms) {
    nlohmann::ordered_json entry;
    entry["axiom"] = ax.label;
    entry["status"] = ax.passed ? "pass" : "fail";
    if (ax.passed) {
      entry["witness"] = nullptr;
    } else {
      nlohmann::ordered_json w;
      for (size_t i = 0; i < ax.witness.size(); ++i)
        w[kVars[i]] = ax.witness[i];
      entry["witness"] = w;
    }
    doc["axioms"].push_back(entry);
  }
  return doc;
}

struct RoundtripReport {
  HomMap map;
  std::string statement;
};

// The representation theorems, picked by signature:
//   sh / h  : H  ~ sH(Vk(H))        via g(a) = [(a, a*)]
//   dsh     : H  ~ dsH(Vk(H))       via the same g
//   sn / n  : A  ~ N(sH(A), [A+])   via delta(a) = ([a], [~a])
//   dsn     : A  ~ Vk(dsH(A))       via h(a) = ([a], [~a])
inline RoundtripReport roundtrip(const AlgebraTable& a) {
  switch (a.signature.kind) {
    case SignatureKind::SH:
    case SignatureKind::H: {
      AlgebraTable base = a;
      base.signature.kind = SignatureKind::SH;
      TwistAlgebra t = vk(base);
      QuotientResult q = quotient_sh(t.algebra);
      std::vector<int> g(a.n());
      for (int x = 0; x < a.n(); ++x)
        g[x] = q.class_of[t.pair_index(x, pseudocomplement(a, x))];
      HomMap h = is_homomorphism(g, base, q.algebra);
      if (!h.certified || !h.bijective())
        throw Error(ErrorKind::NotBijective, "g(a)=[(a,a*)] is not an iso");
      return {h, a.name + " ~ sH(Vk(" + a.name + "))"};
    }
    case SignatureKind::DSH: {
      TwistAlgebra t = vk_dsh(a);
      QuotientResult q = quotient_dsh(t.algebra);
      std::vector<int> g(a.n());
      for (int x = 0; x < a.n(); ++x)
        g[x] = q.class_of[t.pair_index(x, pseudocomplement(a, x))];
      HomMap h = is_homomorphism(g, a, q.algebra);
      if (!h.certified || !h.bijective())
        throw Error(ErrorKind::NotBijective, "g(a)=[(a,a*)] is not an iso");
      return {h, a.name + " ~ dsH(Vk(" + a.name + "))"};
    }
    case SignatureKind::N:
    case SignatureKind::SN: {
      AlgebraTable base = a;
      base.signature.kind = SignatureKind::SN;
      HomMap h = delta(base);
      if (!h.certified)
        throw Error(ErrorKind::NotBijective, "delta is not an iso");
      return {h, a.name + " ~ N(sH(" + a.name + "), [" + a.name + "+])"};
    }
    case SignatureKind::DSN: {
      QuotientResult q = quotient_dsh(a);
      TwistAlgebra t = vk_dsh(q.algebra);
      std::vector<int> g(a.n());
      for (int x = 0; x < a.n(); ++x) {
        int p = t.pair_index(q.class_of[x], q.class_of[a.neg(x)]);
        if (p < 0)
          throw Error(ErrorKind::NotBijective,
                      "([x],[~x]) escapes the twist");
        g[x] = p;
      }
      HomMap h = is_homomorphism(g, a, t.algebra);
      if (!h.certified || !h.bijective())
        throw Error(ErrorKind::NotBijective, "h(a)=([a],[~a]) is not an iso");
      return {h, a.name + " ~ Vk(dsH(" + a.name + "))"};
    }
    case SignatureKind::PCL: break;
  }
  throw Error(ErrorKind::SignatureMismatch,
              "roundtrip needs sh, h, n, sn, dsh or dsn");
}

inline void require_kind(const AlgebraTable& a,
                         std::initializer_list<SignatureKind> kinds,
                         const std::string& what) {
  for (auto k : kinds)
    if (a.signature.kind == k) return;
  throw Error(ErrorKind::SignatureMismatch,
              what + " does not apply to signature '" +
                  to_string(a.signature.kind) + "'");
}

}  // namespace detail

/// Entry point shared by the binary and the tests. `args` excludes argv[0].
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"workbench for finite semi-Heyting and semi-Nelson algebras"};
  app.require_subcommand(1);

  std::string file, file_b, lattice_file, filter_list;
  bool json = false, strict_sn5 = false, ifilters_only = false;
  bool dot = false, assert_dsn = false;
  int max_size = 4;

  auto* c_check = app.add_subcommand("check", "verify the claimed variety");
  c_check->add_option("file", file)->required();
  c_check->add_flag("--json", json, "emit the report as JSON");
  c_check->add_flag("--strict-sn5", strict_sn5,
                    "evaluate the join form of SN5");

  auto* c_twist = app.add_subcommand("twist", "full twist Vk of the algebra");
  c_twist->add_option("file", file)->required();

  auto* c_nhf =
      app.add_subcommand("nhf", "twist N(H,F) restricted by an i-filter");
  c_nhf->add_option("file", file)->required();
  c_nhf->add_option("--filter", filter_list, "comma-separated element names")
      ->required();

  auto* c_quot = app.add_subcommand("quotient", "semi-Heyting skeleton");
  c_quot->add_option("file", file)->required();

  auto* c_filters = app.add_subcommand("filters", "list lattice filters");
  c_filters->add_option("file", file)->required();
  c_filters->add_flag("--i", ifilters_only, "keep only i-filters");

  auto* c_dense = app.add_subcommand("dense", "list dense elements");
  c_dense->add_option("file", file)->required();

  auto* c_pos = app.add_subcommand("positives", "list positive elements");
  c_pos->add_option("file", file)->required();

  auto* c_center = app.add_subcommand("center", "the fixed point of ~");
  c_center->add_option("file", file)->required();

  auto* c_iso = app.add_subcommand("iso", "search for an isomorphism");
  c_iso->add_option("file_a", file)->required();
  c_iso->add_option("file_b", file_b)->required();

  auto* c_round =
      app.add_subcommand("roundtrip", "verify the representation theorem");
  c_round->add_option("file", file)->required();
  c_round->add_flag("--dsn", assert_dsn,
                    "require the dually hemimorphic route");

  auto* c_enum =
      app.add_subcommand("enum-sh", "enumerate semi-Heyting tables");
  c_enum->add_option("--lattice", lattice_file, "algebra file whose lattice "
                                                "is enumerated")
      ->required();
  c_enum->add_option("--max", max_size, "size bound");

  auto* c_hasse = app.add_subcommand("hasse", "covering diagram");
  c_hasse->add_option("file", file)->required();
  c_hasse->add_flag("--dot", dot, "emit DOT (the default and only format)");

  std::vector<const char*> argv;
  argv.push_back("finalg");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*c_check) {
      AlgebraTable a = detail::load(file);
      CheckReport rep = detail::check_by_signature(a, {strict_sn5});
      if (json)
        out << detail::report_json(a, rep).dump(2) << "\n";
      else
        out << rep.to_text();
      return rep.passed() ? kOk : kMathFailure;
    }
    if (*c_twist) {
      AlgebraTable a = detail::load(file);
      detail::require_kind(
          a, {SignatureKind::SH, SignatureKind::H, SignatureKind::DSH},
          "twist");
      if (!detail::precheck(a, err)) return kMathFailure;
      if (a.signature.kind == SignatureKind::DSH) {
        out << serialize_algebra(vk_dsh(a).algebra);
      } else {
        AlgebraTable base = a;
        base.signature.kind = SignatureKind::SH;
        out << serialize_algebra(vk(base).algebra);
      }
      return kOk;
    }
    if (*c_nhf) {
      AlgebraTable a = detail::load(file);
      detail::require_kind(a, {SignatureKind::SH, SignatureKind::H}, "nhf");
      if (!detail::precheck(a, err)) return kMathFailure;
      AlgebraTable base = a;
      base.signature.kind = SignatureKind::SH;
      out << serialize_algebra(
          nhf(base, parse_element_list(base, filter_list)).algebra);
      return kOk;
    }
    if (*c_quot) {
      AlgebraTable a = detail::load(file);
      detail::require_kind(
          a, {SignatureKind::N, SignatureKind::SN, SignatureKind::DSN},
          "quotient");
      if (!detail::precheck(a, err)) return kMathFailure;
      if (a.signature.kind == SignatureKind::DSN) {
        out << serialize_algebra(quotient_dsh(a).algebra);
      } else {
        AlgebraTable base = a;
        base.signature.kind = SignatureKind::SN;
        out << serialize_algebra(quotient_sh(base).algebra);
      }
      return kOk;
    }
    if (*c_filters) {
      AlgebraTable a = detail::load(file);
      for (const auto& f : enumerate_filters(a.lattice)) {
        if (ifilters_only && !is_ifilter(a, f.mask).all()) continue;
        out << format_element_list(a, f.members()) << "\n";
      }
      return kOk;
    }
    if (*c_dense) {
      AlgebraTable a = detail::load(file);
      detail::require_kind(
          a, {SignatureKind::SH, SignatureKind::H, SignatureKind::DSH},
          "dense");
      if (!detail::precheck(a, err)) return kMathFailure;
      out << format_element_list(a, dense_elements(a)) << "\n";
      return kOk;
    }
    if (*c_pos) {
      AlgebraTable a = detail::load(file);
      detail::require_kind(
          a, {SignatureKind::N, SignatureKind::SN, SignatureKind::DSN},
          "positives");
      if (!detail::precheck(a, err)) return kMathFailure;
      out << format_element_list(a, positives(a)) << "\n";
      return kOk;
    }
    if (*c_center) {
      AlgebraTable a = detail::load(file);
      detail::require_kind(
          a, {SignatureKind::N, SignatureKind::SN, SignatureKind::DSN},
          "center");
      if (!detail::precheck(a, err)) return kMathFailure;
      auto c = center(a);
      out << (c ? a.elem(*c) : "none") << "\n";
      return kOk;
    }
    if (*c_iso) {
      AlgebraTable a = detail::load(file);
      AlgebraTable b = detail::load(file_b);
      auto iso = find_isomorphism(a, b);
      if (!iso) {
        out << "none\n";
        return kMathFailure;
      }
      out << iso->to_text();
      return kOk;
    }
    if (*c_round) {
      AlgebraTable a = detail::load(file);
      if (assert_dsn)
        detail::require_kind(a, {SignatureKind::DSH, SignatureKind::DSN},
                             "roundtrip --dsn");
      if (!detail::precheck(a, err)) return kMathFailure;
      auto rt = detail::roundtrip(a);
      out << rt.map.to_text();
      out << "roundtrip ok: " << rt.statement << "\n";
      return kOk;
    }
    if (*c_enum) {
      AlgebraTable a = detail::load(lattice_file);
      auto algebras = enumerate_semi_heyting(a.lattice, max_size);
      for (const auto& alg : algebras) out << serialize_algebra(alg) << "\n";
      out << "count " << algebras.size() << "\n";
      return kOk;
    }
    if (*c_hasse) {
      AlgebraTable a = detail::load(file);
      (void)dot;  // DOT is the only output format
      out << hasse_dot(a.lattice);
      return kOk;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return is_input_error(e.kind()) ? kInputError : kMathFailure;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kInputError;
  }
  err << "no command\n";
  return kInputError;
}

}  // namespace finalg::cli
