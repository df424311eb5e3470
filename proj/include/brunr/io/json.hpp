#pragma once

// JSON I/O. Requires nlohmann/json (vendor/json.hpp) on the include path.

#include <brunr/class2.hpp>
#include <brunr/groups.hpp>
#include <brunr/lattices.hpp>

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace brunr::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline std::string schema_id(const std::string& name) { return "brunr." + name + "/" + std::to_string(kSchemaVersion); }

namespace detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

inline std::int64_t as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

inline std::size_t as_size(const Json& j, const std::string& where) {
  const std::int64_t v = as_int(j, where);
  if (v < 0) fail(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

inline std::vector<std::int64_t> as_int_list(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<std::vector<std::int64_t>> as_int_rows(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int_list(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline void check_schema(const Json& j, const std::string& name, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find("schema");
  if (it == j.end()) return;  // optional on input
  if (!it->is_string() || *it != schema_id(name)) fail(where, "schema must be \"" + schema_id(name) + "\"");
}

inline void check_prime(std::int64_t p, const std::string& where) {
  if (!num::is_prime(p)) fail(where, std::to_string(p) + " is not prime");
}

}  // namespace detail

/// Integers that fit in 64 bits are emitted as JSON numbers, larger ones as decimal strings.
inline Json to_json(const BigInt& v) {
  if (num::fits_int64(v)) return num::to_int64(v);
  return v.str();
}

inline BigInt bigint_from_json(const Json& j, const std::string& where = "integer") {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      detail::fail(where, "not a decimal integer");
    }
  }
  detail::fail(where, "expected an integer");
}

inline Json to_json(const exactalg::AbelianStructure& s, bool with_generators = false) {
  Json j;
  j["text"] = s.to_string();
  Json f = Json::array();
  for (const auto& d : s.invariant_factors) f.push_back(to_json(d));
  j["invariant_factors"] = std::move(f);
  j["free_rank"] = s.free_rank;
  j["order"] = s.is_finite() ? to_json(s.order()) : Json("infinite");
  if (with_generators && s.generators) {
    Json g = Json::array();
    for (const auto& v : *s.generators) {
      Json row = Json::array();
      for (const auto& x : v) row.push_back(to_json(x));
      g.push_back(std::move(row));
    }
    j["generators"] = std::move(g);
  }
  return j;
}

inline exactalg::AbelianStructure abelian_structure_from_json(const Json& j) {
  const auto& f = detail::field(j, "invariant_factors", "structure");
  if (!f.is_array()) detail::fail("structure.invariant_factors", "expected an array");
  std::vector<BigInt> fac;
  for (const auto& x : f) fac.push_back(bigint_from_json(x, "structure.invariant_factors"));
  auto s = exactalg::structure_from_factors(std::move(fac));
  if (j.contains("free_rank")) s.free_rank = detail::as_size(j["free_rank"], "structure.free_rank");
  return s;
}

// ---------------------------------------------------------------- CentralExtensionData

/// {"schema": "brunr.central_extension/1", "p": 2, "gamma_rank": 4, "c_rank": 1, "lambda": [[...]]}
/// lambda has c_rank rows of gamma_rank*(gamma_rank-1)/2 entries in [0, p), columns ordered (0,1) < (0,2) < ... .
inline Json to_json(const class2::CentralExtensionData& e) {
  Json j;
  j["schema"] = schema_id("central_extension");
  j["p"] = e.p;
  j["gamma_rank"] = e.gamma_rank;
  j["c_rank"] = e.c_rank;
  Json rows = Json::array();
  for (std::size_t i = 0; i < e.c_rank; ++i) rows.push_back(e.lambda.row(i));
  j["lambda"] = std::move(rows);
  return j;
}

inline class2::CentralExtensionData central_extension_from_json(const Json& j) {
  const std::string w = "central_extension";
  detail::check_schema(j, "central_extension", w);
  const std::int64_t p = detail::as_int(detail::field(j, "p", w), w + ".p");
  detail::check_prime(p, w + ".p");
  const std::size_t d = detail::as_size(detail::field(j, "gamma_rank", w), w + ".gamma_rank");
  const std::size_t r = detail::as_size(detail::field(j, "c_rank", w), w + ".c_rank");
  if (d > 16 || r > 128) detail::fail(w, "ranks out of supported range");
  const auto rows = detail::as_int_rows(detail::field(j, "lambda", w), w + ".lambda");
  const std::size_t cols = class2::wedge_dim(d);
  if (rows.size() != r) detail::fail(w + ".lambda", "expected " + std::to_string(r) + " rows");
  exactalg::ModMatrix<std::int64_t> lam(p, r, cols);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != cols) detail::fail(w + ".lambda[" + std::to_string(i) + "]", "expected " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) {
      if (rows[i][k] < 0 || rows[i][k] >= p) detail::fail(w + ".lambda", "entries must lie in [0, p)");
      lam.set(i, k, rows[i][k]);
    }
  }
  return class2::CentralExtensionData(p, d, r, std::move(lam));
}

// ---------------------------------------------------------------- GroupSpec

enum class GroupKind { Cayley, Abelian, Permutation, CentralExtension };

inline std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::Cayley: return "cayley";
    case GroupKind::Abelian: return "abelian";
    case GroupKind::Permutation: return "permutation";
    case GroupKind::CentralExtension: return "central_extension";
  }
  return "?";
}

inline GroupKind group_kind_from_string(const std::string& s) {
  for (auto k : {GroupKind::Cayley, GroupKind::Abelian, GroupKind::Permutation, GroupKind::CentralExtension})
    if (to_string(k) == s) return k;
  throw ParseError("group: unknown kind '" + s + "' (expected cayley, abelian, permutation or central_extension)");
}

/// A group description; exactly one payload is meaningful, selected by `kind`.
struct GroupSpec {
  GroupKind kind = GroupKind::Abelian;
  std::vector<std::vector<std::size_t>> table;         // cayley
  std::vector<std::size_t> invariants;                 // abelian
  std::size_t degree = 0;                              // permutation
  std::vector<groups::Permutation> generators;         // permutation
  std::optional<class2::CentralExtensionData> extension;  // central_extension

  static GroupSpec abelian(std::vector<std::size_t> inv) {
    GroupSpec s;
    s.kind = GroupKind::Abelian;
    s.invariants = std::move(inv);
    return s;
  }
  static GroupSpec permutation(std::size_t degree, std::vector<groups::Permutation> gens) {
    GroupSpec s;
    s.kind = GroupKind::Permutation;
    s.degree = degree;
    s.generators = std::move(gens);
    return s;
  }
  static GroupSpec central_extension(class2::CentralExtensionData e) {
    GroupSpec s;
    s.kind = GroupKind::CentralExtension;
    s.extension = std::move(e);
    return s;
  }
  static GroupSpec cayley(std::vector<std::vector<std::size_t>> t) {
    GroupSpec s;
    s.kind = GroupKind::Cayley;
    s.table = std::move(t);
    return s;
  }

  groups::CayleyGroup build(const groups::GroupOptions& opts = {}) const {
    switch (kind) {
      case GroupKind::Cayley: return groups::CayleyGroup::from_table(table, opts);
      case GroupKind::Abelian: return invariants.empty() ? groups::cyclic(1) : groups::from_abelian(invariants, opts);
      case GroupKind::Permutation: return groups::from_permutations(degree, generators, opts);
      case GroupKind::CentralExtension: return groups::from_central_extension(*extension, std::nullopt, opts);
    }
    throw Error("GroupSpec: bad kind");
  }

  /// |G| without building the table, when it is cheap to know.
  std::optional<BigInt> known_order() const {
    switch (kind) {
      case GroupKind::Cayley: return BigInt(table.size());
      case GroupKind::Abelian: {
        BigInt n = 1;
        for (auto k : invariants) n *= k;
        return n;
      }
      case GroupKind::CentralExtension: return num::ipow(BigInt(extension->p), static_cast<int>(extension->order_exponent()));
      default: return std::nullopt;
    }
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Canonical form: {"schema": "brunr.group/1", "kind": ..., <payload>}.
/// Payloads: cayley {"table"}, abelian {"invariants"}, permutation {"degree", "generators"},
/// central_extension {"p", "gamma_rank", "c_rank", "lambda"} (the CentralExtensionData fields).
inline Json to_json(const GroupSpec& s) {
  Json j;
  j["schema"] = schema_id("group");
  j["kind"] = to_string(s.kind);
  switch (s.kind) {
    case GroupKind::Cayley: j["table"] = s.table; break;
    case GroupKind::Abelian: j["invariants"] = s.invariants; break;
    case GroupKind::Permutation:
      j["degree"] = s.degree;
      j["generators"] = s.generators;
      break;
    case GroupKind::CentralExtension: {
      Json e = to_json(*s.extension);
      for (const char* k : {"p", "gamma_rank", "c_rank", "lambda"}) j[k] = e[k];
      break;
    }
  }
  return j;
}

/// Parses a GroupSpec. A missing "kind" is taken from `default_kind` when given.
inline GroupSpec group_spec_from_json(const Json& j, std::optional<GroupKind> default_kind = std::nullopt) {
  const std::string w = "group";
  detail::check_schema(j, "group", w);
  GroupKind kind;
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) detail::fail(w + ".kind", "expected a string");
    kind = group_kind_from_string(j["kind"].get<std::string>());
    if (default_kind && *default_kind != kind)
      detail::fail(w + ".kind", "expected kind '" + to_string(*default_kind) + "', found '" + to_string(kind) + "'");
  } else if (default_kind) {
    kind = *default_kind;
  } else {
    detail::fail(w, "missing field 'kind'");
  }
  for (const auto& [key, _] : j.items()) {
    static const std::vector<std::string> common{"schema", "kind", "name"};
    static const std::vector<std::vector<std::string>> payload{
        {"table"}, {"invariants"}, {"degree", "generators"}, {"p", "gamma_rank", "c_rank", "lambda"}};
    const auto& allowed = payload[static_cast<std::size_t>(kind)];
    if (std::find(common.begin(), common.end(), key) == common.end() && std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      detail::fail(w, "field '" + key + "' does not belong to kind '" + to_string(kind) + "'");
  }
  GroupSpec s;
  s.kind = kind;
  switch (kind) {
    case GroupKind::Cayley: {
      const auto rows = detail::as_int_rows(detail::field(j, "table", w), w + ".table");
      for (const auto& r : rows) {
        if (r.size() != rows.size()) detail::fail(w + ".table", "table must be square");
        std::vector<std::size_t> row;
        for (auto x : r) {
          if (x < 0 || static_cast<std::size_t>(x) >= rows.size()) detail::fail(w + ".table", "entry out of range");
          row.push_back(static_cast<std::size_t>(x));
        }
        s.table.push_back(std::move(row));
      }
      if (s.table.empty()) detail::fail(w + ".table", "empty table");
      break;
    }
    case GroupKind::Abelian: {
      for (auto x : detail::as_int_list(detail::field(j, "invariants", w), w + ".invariants")) {
        if (x < 2) detail::fail(w + ".invariants", "every cyclic order must be at least 2");
        s.invariants.push_back(static_cast<std::size_t>(x));
      }
      break;
    }
    case GroupKind::Permutation: {
      s.degree = detail::as_size(detail::field(j, "degree", w), w + ".degree");
      for (const auto& g : detail::as_int_rows(detail::field(j, "generators", w), w + ".generators")) {
        if (g.size() != s.degree) detail::fail(w + ".generators", "each generator must list degree images");
        groups::Permutation perm;
        for (auto x : g) {
          if (x < 0 || static_cast<std::size_t>(x) >= s.degree) detail::fail(w + ".generators", "image out of range");
          perm.push_back(static_cast<std::size_t>(x));
        }
        s.generators.push_back(std::move(perm));
      }
      break;
    }
    case GroupKind::CentralExtension: {
      Json e = j;
      e.erase("kind");
      e.erase("schema");
      e.erase("name");
      s.extension = central_extension_from_json(e);
      break;
    }
  }
  return s;
}

/// A central-extension group from either a CentralExtensionData document or a GroupSpec of that kind.
inline GroupSpec extension_spec_from_json(const Json& j) {
  if (j.is_object() && j.contains("schema") && j["schema"] == schema_id("central_extension"))
    return GroupSpec::central_extension(central_extension_from_json(j));
  return group_spec_from_json(j, GroupKind::CentralExtension);
}

/// Shorthands: "abelian:2,2,2", "cyclic:6", "symmetric:4", "dihedral:4", "heisenberg:3".
/// Each expands to a canonical GroupSpec.
inline std::optional<GroupSpec> group_spec_from_shorthand(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
  std::vector<std::int64_t> nums;
  std::stringstream ss(rest);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      nums.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("group shorthand '" + text + "': '" + tok + "' is not an integer");
    }
  }
  auto one = [&]() -> std::int64_t {
    if (nums.size() != 1) throw ParseError("group shorthand '" + text + "': expected one integer");
    return nums[0];
  };
  if (kind == "abelian") {
    std::vector<std::size_t> inv;
    for (auto x : nums) {
      if (x < 2) throw ParseError("group shorthand '" + text + "': orders must be at least 2");
      inv.push_back(static_cast<std::size_t>(x));
    }
    return GroupSpec::abelian(std::move(inv));
  }
  if (kind == "cyclic") {
    const auto n = one();
    if (n < 1) throw ParseError("group shorthand '" + text + "': order must be positive");
    return n == 1 ? GroupSpec::abelian({}) : GroupSpec::abelian({static_cast<std::size_t>(n)});
  }
  if (kind == "symmetric" || kind == "dihedral") {
    const auto n = one();
    if (n < (kind == "symmetric" ? 2 : 3) || n > 64) throw ParseError("group shorthand '" + text + "': degree out of range");
    const auto k = static_cast<std::size_t>(n);
    groups::Permutation a(k), b(k);
    for (std::size_t x = 0; x < k; ++x) {
      a[x] = (x + 1) % k;
      b[x] = kind == "symmetric" ? x : (k - x) % k;
    }
    if (kind == "symmetric") std::swap(b[0], b[1]);
    return GroupSpec::permutation(k, {b, a});
  }
  if (kind == "heisenberg") {
    const auto p = one();
    if (!num::is_prime(p)) throw ParseError("group shorthand '" + text + "': p must be prime");
    return GroupSpec::central_extension(class2::CentralExtensionData(p, 2, 1, exactalg::ModMatrix<std::int64_t>(p, {{1}})));
  }
  throw ParseError("group shorthand '" + text + "': unknown family '" + kind + "'");
}

// ---------------------------------------------------------------- Subspace

/// {"schema": "brunr.subspace/1", "p": 2, "d": 4, "basis": [[...]]}: a subspace of Lambda^2 F_p^d spanned by the rows.
inline Json to_json(const class2::Subspace& s, std::size_t d) {
  Json j;
  j["schema"] = schema_id("subspace");
  j["p"] = s.p();
  j["d"] = d;
  j["basis"] = s.basis();
  return j;
}

struct SubspaceSpec {
  std::size_t d = 4;
  class2::Subspace space{2, 6};
};

inline SubspaceSpec subspace_from_json(const Json& j) {
  const std::string w = "subspace";
  detail::check_schema(j, "subspace", w);
  const std::int64_t p = detail::as_int(detail::field(j, "p", w), w + ".p");
  detail::check_prime(p, w + ".p");
  const std::size_t d = detail::as_size(detail::field(j, "d", w), w + ".d");
  if (d < 2 || d > 16) detail::fail(w + ".d", "must lie in 2..16");
  const std::size_t n = class2::wedge_dim(d);
  auto rows = detail::as_int_rows(detail::field(j, "basis", w), w + ".basis");
  for (const auto& r : rows)
    if (r.size() != n) detail::fail(w + ".basis", "each row needs d(d-1)/2 = " + std::to_string(n) + " entries");
  return {d, class2::Subspace::span(p, n, std::move(rows))};
}

// ---------------------------------------------------------------- GLattice

/// {"schema": "brunr.glattice/1", "group": GroupSpec, "kind": "standard"}
/// or {"schema": "brunr.glattice/1", "group": GroupSpec, "kind": "custom", "rank": r,
///     "images": [{"element": g, "matrix": [[...]]}, ...]}
/// For "custom" the listed elements must generate the group; their matrices (acting on column vectors)
/// determine the action, which is then checked to be a homomorphism.
struct LatticeSpec {
  GroupSpec group;
  lattices::LatticeKind kind = lattices::LatticeKind::Trivial;
  std::size_t rank = 1;
  std::vector<std::pair<groups::Element, std::vector<std::vector<std::int64_t>>>> images;  // custom only

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

inline Json to_json(const LatticeSpec& l) {
  Json j;
  j["schema"] = schema_id("glattice");
  j["group"] = to_json(l.group);
  j["kind"] = lattices::to_string(l.kind);
  if (l.kind == lattices::LatticeKind::Custom) {
    j["rank"] = l.rank;
    Json im = Json::array();
    for (const auto& [g, m] : l.images) im.push_back(Json{{"element", g}, {"matrix", m}});
    j["images"] = std::move(im);
  }
  return j;
}

inline LatticeSpec lattice_spec_from_json(const Json& j) {
  const std::string w = "glattice";
  detail::check_schema(j, "glattice", w);
  LatticeSpec l;
  l.group = group_spec_from_json(detail::field(j, "group", w));
  const auto& k = detail::field(j, "kind", w);
  if (!k.is_string()) detail::fail(w + ".kind", "expected a string");
  try {
    l.kind = lattices::lattice_kind_from_string(k.get<std::string>());
  } catch (const Error& e) {
    detail::fail(w + ".kind", e.what());
  }
  if (l.kind != lattices::LatticeKind::Custom) return l;
  l.rank = detail::as_size(detail::field(j, "rank", w), w + ".rank");
  if (l.rank < 1) detail::fail(w + ".rank", "must be positive");
  const auto& im = detail::field(j, "images", w);
  if (!im.is_array()) detail::fail(w + ".images", "expected an array");
  for (const auto& e : im) {
    const auto g = detail::as_size(detail::field(e, "element", w + ".images"), w + ".images.element");
    auto m = detail::as_int_rows(detail::field(e, "matrix", w + ".images"), w + ".images.matrix");
    if (m.size() != l.rank) detail::fail(w + ".images.matrix", "expected rank rows");
    for (const auto& r : m)
      if (r.size() != l.rank) detail::fail(w + ".images.matrix", "expected rank columns");
    l.images.emplace_back(g, std::move(m));
  }
  return l;
}

/// Extends the generator images over the Cayley graph and validates the result.
inline lattices::GLattice build_lattice(const LatticeSpec& l, const groups::CayleyGroup& g, const lattices::LatticeOptions& opts = {}) {
  if (l.kind != lattices::LatticeKind::Custom) return lattices::make_lattice(g, l.kind, opts);
  using exactalg::IntMatrix;
  const std::size_t n = g.order();
  std::vector<std::optional<IntMatrix>> act(n);
  std::vector<std::pair<groups::Element, IntMatrix>> gens;
  for (const auto& [x, rows] : l.images) {
    if (x >= n) throw InvalidLattice("GLattice: image for element " + std::to_string(x) + " outside the group");
    std::vector<std::vector<BigInt>> big;
    for (const auto& r : rows) big.emplace_back(r.begin(), r.end());
    gens.emplace_back(x, IntMatrix::from_rows(big, l.rank));
  }
  act[g.identity()] = IntMatrix::identity(l.rank);
  std::vector<groups::Element> queue{g.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& [s, m] : gens) {
      const groups::Element y = g.mul(queue[i], s);
      if (!act[y]) {
        act[y] = *act[queue[i]] * m;
        queue.push_back(y);
      }
    }
  if (queue.size() != n) throw InvalidLattice("GLattice: the listed elements do not generate the group");
  std::vector<IntMatrix> all;
  for (auto& m : act) all.push_back(std::move(*m));
  lattices::GLattice out(g, std::move(all));
  for (const auto& [s, m] : gens)
    if (!(out.action(s) == m)) throw InvalidLattice("GLattice: images are inconsistent with the group relations");
  return out;
}

// ---------------------------------------------------------------- files and digests

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

/// 64-bit FNV-1a of the canonical (compact) serialization, as "fnv1a64:<16 hex digits>".
inline std::string digest(const Json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

/// Report envelope: {"schema": "brunr.report/1", "command", "options", "input", "input_digest", "result", ...}.
inline Json make_report(const std::string& command, const Json& options, const Json& input) {
  Json r;
  r["schema"] = schema_id("report");
  r["command"] = command;
  r["options"] = options;
  r["input"] = input;
  r["input_digest"] = digest(input);
  return r;
}

}  // namespace brunr::io
