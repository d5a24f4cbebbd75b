#include "lagmat/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lagmat {

using nlohmann::json;

namespace {

struct KindName {
  InstanceKind kind;
  const char* name;
};

constexpr KindName kKinds[] = {
    {InstanceKind::Bases, "bases"},         {InstanceKind::Circuits, "circuits"},
    {InstanceKind::Rgp, "rgp"},             {InstanceKind::FCircuits, "fcircuits"},
    {InstanceKind::Matrix, "matrix"},       {InstanceKind::Matroid, "matroid"},
    {InstanceKind::Symmetric, "symmetric"}, {InstanceKind::Gaussoid, "gaussoid"},
};

const char* family_key(InstanceKind k) {
  switch (k) {
    case InstanceKind::Bases:
    case InstanceKind::Symmetric: return "bases";
    case InstanceKind::Circuits: return "circuits";
    case InstanceKind::Gaussoid: return "members";
    default: throw std::logic_error("not a set-family kind");
  }
}

template <class T>
T wrap(auto&& f, const std::string& where) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw SchemaError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int read_n(const json& j) {
  const json& v = field(j, "n");
  if (!v.is_number_integer()) throw SchemaError("\"n\" must be an integer");
  const long n = v.get<long>();
  if (n < 0 || n > kMaxHalfSize) throw SchemaError("\"n\" out of range");
  return static_cast<int>(n);
}

std::string read_string(const json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw SchemaError(std::string(what) + " must be a string");
}

TractId read_tract(const json& j, const char* key) {
  const std::string tag = read_string(field(j, key), key);
  return wrap<TractId>([&] { return TractId::parse(tag); }, "tract");
}

std::vector<ESubset> read_sets(const json& j, const char* key, int n) {
  const json& list = field(j, key);
  if (!list.is_array()) throw SchemaError(std::string("\"") + key + "\" must be an array");
  std::vector<ESubset> out;
  for (const json& item : list) {
    const std::string text = read_string(item, "subset");
    out.push_back(wrap<ESubset>([&] { return ESubset::parse(n, text); }, "subset \"" + text + "\""));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json set_list(const std::vector<ESubset>& sets) {
  json out = json::array();
  for (const ESubset& s : sets) out.push_back(s.to_string());
  return out;
}

}  // namespace

const char* to_string(InstanceKind k) {
  for (const auto& [kind, name] : kKinds)
    if (kind == k) return name;
  return "?";
}

InstanceKind parse_kind(std::string_view tag) {
  for (const auto& [kind, name] : kKinds)
    if (tag == name) return kind;
  throw SchemaError("unknown kind \"" + std::string(tag) + "\"");
}

SetFamilyFile family_file(InstanceKind kind, int n, std::vector<ESubset> sets) {
  family_key(kind);
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return SetFamilyFile{kind, n, std::move(sets)};
}

InstanceKind kind_of(const Instance& x) {
  struct Visitor {
    InstanceKind operator()(const SetFamilyFile& f) const { return f.kind; }
    InstanceKind operator()(const MatroidFile&) const { return InstanceKind::Matroid; }
    InstanceKind operator()(const RGPFunction&) const { return InstanceKind::Rgp; }
    InstanceKind operator()(const FCircuitSet&) const { return InstanceKind::FCircuits; }
    InstanceKind operator()(const FieldMatrix&) const { return InstanceKind::Matrix; }
  };
  return std::visit(Visitor{}, x);
}

json to_json(const Instance& x) {
  json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = to_string(kind_of(x));
  if (const auto* f = std::get_if<SetFamilyFile>(&x)) {
    j["n"] = f->n;
    j[family_key(f->kind)] = set_list(f->sets);
  } else if (const auto* m = std::get_if<MatroidFile>(&x)) {
    j["n"] = m->n;
    json list = json::array();
    for (Mask b : m->bases) list.push_back(mask_to_string(b));
    j["bases"] = list;
  } else if (const auto* phi = std::get_if<RGPFunction>(&x)) {
    j["n"] = phi->n();
    j["tract"] = phi->tract().tag();
    json values = json::object();
    for (std::size_t k = 0; k < phi->domain().size(); ++k)
      if (!phi->values()[k].is_zero()) values[phi->domain()[k].to_string()] = phi->values()[k].to_string();
    j["values"] = values;
  } else if (const auto* c = std::get_if<FCircuitSet>(&x)) {
    j["n"] = c->n();
    j["tract"] = c->tract().tag();
    json vectors = json::array();
    for (const FVector& v : c->vectors()) {
      json entry = json::object();
      for (int b = 0; b < 2 * c->n(); ++b)
        if (!v[static_cast<std::size_t>(b)].is_zero())
          entry[Element::from_bit(c->n(), b).to_string()] = v[static_cast<std::size_t>(b)].to_string();
      vectors.push_back(entry);
    }
    j["vectors"] = vectors;
  } else {
    const FieldMatrix& mat = std::get<FieldMatrix>(x);
    j["n"] = mat.rows();
    j["field"] = mat.field().tag();
    json rows = json::array();
    for (int r = 0; r < mat.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < mat.cols(); ++c) row.push_back(mat.at(r, c).to_string());
      rows.push_back(row);
    }
    j["rows"] = rows;
  }
  return j;
}

Instance from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("instance must be a JSON object");
  const json& schema = field(j, "schema");
  if (!schema.is_number_integer() || schema.get<int>() != kSchemaVersion)
    throw SchemaError("unsupported schema version");
  const InstanceKind kind = parse_kind(read_string(field(j, "kind"), "kind"));
  const int n = read_n(j);
  switch (kind) {
    case InstanceKind::Bases:
    case InstanceKind::Circuits:
    case InstanceKind::Symmetric:
    case InstanceKind::Gaussoid:
      return SetFamilyFile{kind, n, read_sets(j, family_key(kind), n)};
    case InstanceKind::Matroid: {
      if (n > kMaxMatroidGround) throw SchemaError("matroid ground set too large");
      MatroidFile m{n, {}};
      const json& list = field(j, "bases");
      if (!list.is_array()) throw SchemaError("\"bases\" must be an array");
      for (const json& item : list) {
        const std::string text = read_string(item, "basis");
        const Mask b = wrap<Mask>([&] { return parse_mask(n, text); }, "basis \"" + text + "\"");
        if (n < 32 && (b >> n)) throw SchemaError("basis \"" + text + "\" outside [n]");
        m.bases.push_back(b);
      }
      std::sort(m.bases.begin(), m.bases.end());
      m.bases.erase(std::unique(m.bases.begin(), m.bases.end()), m.bases.end());
      return m;
    }
    case InstanceKind::Rgp: {
      const TractId t = read_tract(j, "tract");
      if (n > 12) throw SchemaError("rgp files are limited to n <= 12");
      RGPFunction phi(n, t);
      const json& values = field(j, "values");
      if (!values.is_object()) throw SchemaError("\"values\" must be an object");
      for (const auto& [key, value] : values.items()) {
        const ESubset b = wrap<ESubset>([&] { return ESubset::parse(n, key); }, "coordinate \"" + key + "\"");
        const std::string text = read_string(value, "value");
        const TractElement v = wrap<TractElement>([&] { return TractElement::parse(t, text); }, "value \"" + text + "\"");
        wrap<int>([&] { phi.set(b, v); return 0; }, "coordinate \"" + key + "\"");
      }
      return phi;
    }
    case InstanceKind::FCircuits: {
      const TractId t = read_tract(j, "tract");
      FCircuitSet c(n, t);
      const json& vectors = field(j, "vectors");
      if (!vectors.is_array()) throw SchemaError("\"vectors\" must be an array");
      for (const json& entry : vectors) {
        if (!entry.is_object()) throw SchemaError("each vector must be an object");
        FVector v(static_cast<std::size_t>(2 * n), TractElement::zero(t));
        for (const auto& [key, value] : entry.items()) {
          const Element e = wrap<Element>([&] { return Element::parse(key); }, "element \"" + key + "\"");
          if (e.index() > n) throw SchemaError("element \"" + key + "\" outside the ground set");
          const std::string text = read_string(value, "value");
          v[static_cast<std::size_t>(e.bit(n))] =
              wrap<TractElement>([&] { return TractElement::parse(t, text); }, "value \"" + text + "\"");
        }
        wrap<int>([&] { c.add(v); return 0; }, "vector");
      }
      return c;
    }
    case InstanceKind::Matrix: {
      const TractId t = read_tract(j, "field");
      if (!t.is_field()) throw SchemaError("matrix field must be GF(p) or Q");
      const json& rows = field(j, "rows");
      if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw SchemaError("\"rows\" must hold n rows");
      FieldMatrix m(t, n, 2 * n);
      for (int r = 0; r < n; ++r) {
        const json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != 2 * n) throw SchemaError("each row must hold 2n entries");
        for (int c = 0; c < 2 * n; ++c) {
          const std::string text = read_string(row[static_cast<std::size_t>(c)], "entry");
          m.set(r, c, wrap<TractElement>([&] { return TractElement::parse(t, text); }, "entry \"" + text + "\""));
        }
      }
      return m;
    }
  }
  throw SchemaError("unhandled kind");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string serialize(const Instance& x) { return dump(to_json(x)); }

Instance parse_instance(std::string_view text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw SchemaError("malformed JSON");
  return from_json(j);
}

Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

}  // namespace lagmat
