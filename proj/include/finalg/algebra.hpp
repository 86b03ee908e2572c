#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finalg/error.hpp"
#include "finalg/lattice.hpp"

namespace finalg {

// Canonical operation names, one per connective the file format knows.
namespace op {
inline constexpr const char* imp = "imp";      // binary implication
inline constexpr const char* neg = "neg";      // strong negation ~
inline constexpr const char* tilde = "tilde";  // dual hemimorphism
inline constexpr const char* prime = "prime";  // hemimorphism on pairs
inline constexpr const char* star = "star";    // pseudocomplement
inline constexpr const char* meet = "meet";    // explicit lattice tables are
inline constexpr const char* join = "join";    // allowed but must agree
}  // namespace op

enum class SignatureKind { SH, H, N, SN, DSH, DSN, PCL };

inline const char* to_string(SignatureKind k) {
  switch (k) {
    case SignatureKind::SH: return "sh";
    case SignatureKind::H: return "h";
    case SignatureKind::N: return "n";
    case SignatureKind::SN: return "sn";
    case SignatureKind::DSH: return "dsh";
    case SignatureKind::DSN: return "dsn";
    case SignatureKind::PCL: return "pcl";
  }
  return "?";
}

inline std::optional<SignatureKind> signature_from_string(std::string_view s) {
  if (s == "sh") return SignatureKind::SH;
  if (s == "h") return SignatureKind::H;
  if (s == "n") return SignatureKind::N;
  if (s == "sn") return SignatureKind::SN;
  if (s == "dsh") return SignatureKind::DSH;
  if (s == "dsn") return SignatureKind::DSN;
  if (s == "pcl") return SignatureKind::PCL;
  return std::nullopt;
}

struct OpSpec {
  const char* name;
  int arity;
};

struct Signature {
  SignatureKind kind = SignatureKind::SH;

  std::span<const OpSpec> required_ops() const {
    static constexpr OpSpec kSH[] = {{op::imp, 2}};
    static constexpr OpSpec kN[] = {{op::imp, 2}, {op::neg, 1}};
    static constexpr OpSpec kDSH[] = {{op::imp, 2}, {op::tilde, 1}};
    static constexpr OpSpec kDSN[] = {{op::imp, 2}, {op::neg, 1},
                                      {op::prime, 1}};
    static constexpr OpSpec kPCL[] = {{op::star, 1}};
    switch (kind) {
      case SignatureKind::SH:
      case SignatureKind::H: return kSH;
      case SignatureKind::N:
      case SignatureKind::SN: return kN;
      case SignatureKind::DSH: return kDSH;
      case SignatureKind::DSN: return kDSN;
      case SignatureKind::PCL: return kPCL;
    }
    return kSH;
  }

  // Varieties whose type carries the constant 1 explicitly (the rest take
  // both bounds from the lattice).
  bool requires_one() const {
    return kind == SignatureKind::N || kind == SignatureKind::SN ||
           kind == SignatureKind::DSN;
  }

  bool operator==(const Signature&) const = default;
};

struct OpTable {
  int arity = 0;
  std::vector<int> unary;                // arity 1
  std::vector<std::vector<int>> binary;  // arity 2, binary[x][y]

  bool operator==(const OpTable&) const = default;
};

/// A finite algebra: a bounded lattice plus named operation tables and a
/// declared signature. Everything is index-valued; names live only on the
/// lattice. Immutable by convention once validated.
struct AlgebraTable {
  std::string name = "A";
  FiniteLattice lattice;
  std::map<std::string, OpTable> ops;
  std::map<std::string, int> constants;
  Signature signature;

  int n() const { return lattice.size(); }
  const std::string& elem(int i) const { return lattice.name(i); }
  int meet(int x, int y) const { return lattice.meet(x, y); }
  int join(int x, int y) const { return lattice.join(x, y); }
  bool leq(int x, int y) const { return lattice.leq(x, y); }
  int bottom() const { return lattice.bottom(); }
  int top() const { return lattice.top(); }

  // The constant 1 of the (semi-)Nelson type; defaults to the lattice top.
  int one() const {
    auto it = constants.find("one");
    return it == constants.end() ? lattice.top() : it->second;
  }

  bool has_op(std::string_view name, int arity) const {
    auto it = ops.find(std::string(name));
    return it != ops.end() && it->second.arity == arity;
  }

  int op1(std::string_view name, int x) const {
    return ops.at(std::string(name)).unary[x];
  }
  int op2(std::string_view name, int x, int y) const {
    return ops.at(std::string(name)).binary[x][y];
  }

  int imp(int x, int y) const { return op2(op::imp, x, y); }
  int neg(int x) const { return op1(op::neg, x); }
  int tilde(int x) const { return op1(op::tilde, x); }
  int prime(int x) const { return op1(op::prime, x); }

  // Checks that the claimed signature is fully backed by the tables and that
  // every table entry is a valid element index.
  void validate() const {
    for (const auto& spec : signature.required_ops())
      if (!has_op(spec.name, spec.arity))
        throw Error(ErrorKind::SignatureMismatch,
                    "signature " + std::string(to_string(signature.kind)) +
                        " requires op " + spec.name + " of arity " +
                        std::to_string(spec.arity));
    for (const auto& [name, table] : ops) {
      if (table.arity == 1) {
        if (static_cast<int>(table.unary.size()) != n())
          throw Error(ErrorKind::ArityMismatch, "op " + name);
        for (int v : table.unary) check_index(v, name);
      } else if (table.arity == 2) {
        if (static_cast<int>(table.binary.size()) != n())
          throw Error(ErrorKind::ArityMismatch, "op " + name);
        for (const auto& row : table.binary) {
          if (static_cast<int>(row.size()) != n())
            throw Error(ErrorKind::ArityMismatch, "op " + name);
          for (int v : row) check_index(v, name);
        }
      } else {
        throw Error(ErrorKind::ArityMismatch,
                    "op " + name + " has unsupported arity");
      }
    }
    for (const auto& [name, v] : constants) check_index(v, "const " + name);
  }

  bool operator==(const AlgebraTable& o) const {
    return lattice == o.lattice && ops == o.ops && constants == o.constants &&
           signature == o.signature && name == o.name;
  }

 private:
  void check_index(int v, const std::string& where) const {
    if (v < 0 || v >= n())
      throw Error(ErrorKind::InvalidArgument,
                  "table entry out of range in " + where);
  }
};

inline AlgebraTable make_algebra(std::string name, FiniteLattice lat,
                                 SignatureKind kind) {
  AlgebraTable a;
  a.name = std::move(name);
  a.lattice = std::move(lat);
  a.signature.kind = kind;
  return a;
}

/// View of `a` whose implication is taken from the named binary table,
/// reinterpreted under `kind`. Used to check derived implications (the
/// Heyting arrow, the weak implication) against their target variety.
inline AlgebraTable with_imp_from(const AlgebraTable& a,
                                  const std::string& from,
                                  SignatureKind kind) {
  auto it = a.ops.find(from);
  if (it == a.ops.end() || it->second.arity != 2)
    throw Error(ErrorKind::SignatureMismatch,
                "no binary op '" + from + "' to use as implication");
  AlgebraTable b = a;
  b.ops[op::imp] = it->second;
  b.signature.kind = kind;
  b.validate();
  return b;
}

}  // namespace finalg
