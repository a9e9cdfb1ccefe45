#include "gammalab/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gammalab/errors.hpp"

namespace gammalab {

namespace fs = std::filesystem;

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw ResourceError("SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

namespace {

const Json& field(const Json& doc, const char* key, const std::string& where) {
  if (!doc.is_object()) throw InputError(where + ": expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw InputError(where + ": missing \"" + key + "\"");
  return *it;
}

std::uint64_t natural(const Json& v, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw InputError(where + ": expected a non-negative integer");
  return v.get<std::uint64_t>();
}

std::vector<Element> flat_table(const Json& v, std::size_t expected, std::size_t range, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array");
  if (v.size() != expected)
    throw InputError(where + ": expected " + std::to_string(expected) + " entries, got " + std::to_string(v.size()));
  std::vector<Element> out(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    const auto x = natural(v[i], where + "[" + std::to_string(i) + "]");
    if (x >= range)
      throw InputError(where + "[" + std::to_string(i) + "] = " + std::to_string(x) + " out of range");
    out[i] = static_cast<Element>(x);
  }
  return out;
}

AdditiveTable square_table(const Json& v, std::size_t n, const std::string& where) {
  if (!v.is_array() || v.size() != n) throw InputError(where + ": expected " + std::to_string(n) + " rows");
  std::vector<Element> flat;
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = flat_table(v[r], n, n, where + "[" + std::to_string(r) + "]");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  AdditiveTable t(n, std::move(flat));
  if (auto bad = t.first_monoid_violation()) {
    std::string els;
    for (auto e : bad->elements) els += (els.empty() ? "" : ",") + std::to_string(e);
    throw InputError(where + ": not a commutative monoid (" + bad->law + " fails at " + els + ")");
  }
  return t;
}

std::size_t carrier(const Json& doc, const std::string& where) {
  const auto n = natural(field(doc, "carrier", where), where + ".carrier");
  if (n == 0) throw InputError(where + ".carrier: must be positive");
  return n;
}

Json rows(const AdditiveTable& t) {
  Json out = Json::array();
  for (Element a = 0; a < t.size(); ++a) {
    Json row = Json::array();
    for (Element b = 0; b < t.size(); ++b) row.push_back(t.add(a, b));
    out.push_back(row);
  }
  return out;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.generic_string() + ": cannot read file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

Semiring semiring_from_json(const Json& doc, const std::string& where) {
  const auto n = carrier(doc, where);
  if (doc.contains("zero") && natural(doc["zero"], where + ".zero") != 0)
    throw InputError(where + ".zero: the additive zero must be element 0");
  auto add = square_table(field(doc, "add", where), n, where + ".add");
  const auto& gammas = field(doc, "gammas", where);
  if (!gammas.is_array() || gammas.empty()) throw InputError(where + ".gammas: expected a nonempty array");
  std::vector<std::string> labels;
  for (const auto& g : gammas) labels.push_back(g.is_string() ? g.get<std::string>() : g.dump());
  const auto& tern = field(doc, "tern", where);
  if (!tern.is_object()) throw InputError(where + ".tern: expected an object keyed by mode label");
  if (tern.size() != labels.size()) throw InputError(where + ".tern: expected one table per mode");
  std::vector<std::vector<Element>> tables;
  for (const auto& label : labels) {
    if (!tern.contains(label)) throw InputError(where + ".tern: no table for mode \"" + label + "\"");
    tables.push_back(flat_table(tern[label], n * n * n, n, where + ".tern[\"" + label + "\"]"));
  }
  try {
    return Semiring(std::move(add), std::move(labels), std::move(tables));
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

Json semiring_to_json(const Semiring& T) {
  Json doc;
  doc["carrier"] = T.size();
  doc["zero"] = 0;
  doc["add"] = rows(T.additive());
  doc["gammas"] = T.labels();
  Json tern = Json::object();
  for (Mode g = 0; g < T.mode_count(); ++g) {
    const auto t = T.tern_table(g);
    tern[T.label(g)] = std::vector<Element>(t.begin(), t.end());
  }
  doc["tern"] = tern;
  return doc;
}

GammaModule module_from_json(const Json& doc, std::shared_ptr<const Semiring> over, const std::string& where) {
  const auto m = carrier(doc, where);
  auto add = square_table(field(doc, "add", where), m, where + ".add");
  const std::size_t n = over->size();
  auto action = flat_table(field(doc, "action", where), n * n * m * over->mode_count(), m, where + ".action");
  return GammaModule(std::move(over), std::move(add), std::move(action));
}

Json module_to_json(const GammaModule& m, const std::string& over_ref) {
  Json doc;
  doc["over"] = over_ref;
  doc["carrier"] = m.size();
  doc["add"] = rows(m.additive());
  doc["action"] = m.action();
  return doc;
}

const Json& Workspace::document(const fs::path& path) {
  const auto key = path.lexically_normal().generic_string();
  if (auto it = docs_.find(key); it != docs_.end()) return it->second;
  const auto text = read_file(path);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(key + ": malformed JSON (" + e.what() + ")");
  }
  inputs_.push_back({key, sha256_hex(text)});
  return docs_.emplace(key, std::move(doc)).first->second;
}

std::shared_ptr<const Semiring> Workspace::structure(const fs::path& path) {
  const auto key = path.lexically_normal().generic_string();
  if (auto it = structures_.find(key); it != structures_.end()) return it->second;
  auto s = std::make_shared<const Semiring>(semiring_from_json(document(path), key));
  structures_.emplace(key, s);
  return s;
}

std::shared_ptr<const Semiring> Workspace::base_for(const Json& doc, const fs::path& from,
                                                    std::shared_ptr<const Semiring> expected) {
  const auto where = from.lexically_normal().generic_string();
  if (!doc.is_object()) throw InputError(where + ": expected a JSON object");
  if (!doc.contains("over")) {
    if (expected) return expected;
    throw InputError(where + ": missing \"over\"");
  }
  if (!doc["over"].is_string()) throw InputError(where + ".over: expected a relative path");
  auto own = structure(from.parent_path() / doc["over"].get<std::string>());
  if (expected && !(*own == *expected))
    throw InputError(where + ".over: refers to a different structure than the one given");
  return expected ? expected : own;
}

GammaModule Workspace::module(const fs::path& path, std::shared_ptr<const Semiring> expected) {
  const auto& doc = document(path);
  return module_from_json(doc, base_for(doc, path, std::move(expected)), path.lexically_normal().generic_string());
}

ChainComplex Workspace::complex(const fs::path& path, std::shared_ptr<const Semiring> expected) {
  const auto& doc = document(path);
  const auto where = path.lexically_normal().generic_string();
  auto base = base_for(doc, path, std::move(expected));
  const auto& degrees = field(doc, "degrees", where);
  if (!degrees.is_array()) throw InputError(where + ".degrees: expected an array");
  std::vector<std::pair<std::int64_t, const Json*>> entries;
  for (const auto& d : degrees) {
    const auto& n = field(d, "n", where + ".degrees");
    if (!n.is_number_integer()) throw InputError(where + ".degrees: \"n\" must be an integer");
    entries.emplace_back(n.get<std::int64_t>(), &d);
  }
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].first != entries[i - 1].first + 1)
      throw InputError(where + ".degrees: degrees must be distinct and contiguous");
  std::vector<GammaModule> mods;
  std::vector<std::vector<Element>> ds;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& d = *entries[i].second;
    const auto at = where + ".degrees[n=" + std::to_string(entries[i].first) + "]";
    const auto& ref = field(d, "module", at);
    if (ref.is_string())
      mods.push_back(module(path.parent_path() / ref.get<std::string>(), base));
    else
      mods.push_back(module_from_json(ref, base, at + ".module"));
    const std::size_t below = i == 0 ? 1 : mods[i - 1].size();
    if (d.contains("d"))
      ds.push_back(flat_table(d["d"], mods[i].size(), below, at + ".d"));
    else
      ds.emplace_back(mods[i].size(), 0);
  }
  const int lo = entries.empty() ? 0 : static_cast<int>(entries.front().first);
  try {
    return ChainComplex(base, lo, std::move(mods), std::move(ds));
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

ChainMap Workspace::chain_map(const fs::path& path, std::shared_ptr<const Semiring> expected) {
  const auto& doc = document(path);
  const auto where = path.lexically_normal().generic_string();
  auto base = base_for(doc, path, std::move(expected));
  auto ref = [&](const char* key) {
    const auto& r = field(doc, key, where);
    if (!r.is_string()) throw InputError(where + "." + key + ": expected a relative path");
    return path.parent_path() / r.get<std::string>();
  };
  auto src = complex(ref("source"), base);
  auto dst = complex(ref("target"), base);
  const int lo = std::min(src.empty() ? dst.lo() : src.lo(), dst.empty() ? src.lo() : dst.lo());
  const int hi = std::max(src.empty() ? dst.hi() : src.hi(), dst.empty() ? src.hi() : dst.hi());
  std::map<std::int64_t, const Json*> given;
  if (doc.contains("components")) {
    for (const auto& c : doc["components"]) {
      const auto& n = field(c, "n", where + ".components");
      if (!n.is_number_integer()) throw InputError(where + ".components: \"n\" must be an integer");
      given[n.get<std::int64_t>()] = &c;
    }
  }
  std::vector<std::vector<Element>> comps;
  for (int n = lo; n <= hi; ++n) {
    const auto s = src.module(n).size(), t = dst.module(n).size();
    if (auto it = given.find(n); it != given.end())
      comps.push_back(flat_table(field(*it->second, "f", where), s, t, where + ".components[n=" + std::to_string(n) + "].f"));
    else
      comps.emplace_back(s, 0);
  }
  for (const auto& [n, c] : given)
    if (n < lo || n > hi) throw InputError(where + ".components: degree " + std::to_string(n) + " outside both complexes");
  try {
    return ChainMap(std::move(src), std::move(dst), std::move(comps));
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

}  // namespace gammalab
