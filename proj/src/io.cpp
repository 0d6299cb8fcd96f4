#include "csa/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "csa/error.hpp"

namespace csa::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Error context: the source name plus a path such as mul[3][0].
struct Where {
  std::string source;
  std::string path;

  [[nodiscard]] Where field(std::string_view key) const {
    return {source, path.empty() ? std::string(key) : path + "." + std::string(key)};
  }
  [[nodiscard]] Where at(std::size_t i) const { return {source, path + "[" + std::to_string(i) + "]"}; }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError(source + ": " + (path.empty() ? std::string("top level") : path) + ": " + what);
  }
};

json parse_strict(std::string_view text, const std::string& source) {
  std::vector<std::set<std::string>> keys;
  std::string duplicate;
  json::parser_callback_t cb = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        keys.emplace_back();
        break;
      case json::parse_event_t::object_end:
        keys.pop_back();
        break;
      case json::parse_event_t::key:
        if (!keys.back().insert(parsed.get<std::string>()).second && duplicate.empty()) {
          duplicate = parsed.get<std::string>();
        }
        break;
      default:
        break;
    }
    return true;
  };
  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), cb);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte));
  }
  if (!duplicate.empty()) throw InputError(source + ": duplicate key \"" + duplicate + "\"");
  return doc;
}

void require_object(const json& j, const Where& w, std::initializer_list<std::string_view> required,
                    std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) w.fail("expected an object");
  for (auto key : required) {
    if (!j.contains(std::string(key))) w.fail("missing field \"" + std::string(key) + "\"");
  }
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto k : required) known = known || key == k;
    for (auto k : optional) known = known || key == k;
    if (!known) w.fail("unknown field \"" + key + "\"");
  }
}

std::size_t read_natural(const json& j, const Where& w) {
  if (!j.is_number_unsigned()) w.fail("expected a non-negative integer");
  return j.get<std::size_t>();
}

Scalar read_scalar(const json& j, const Where& w) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Scalar(mpq_class(std::to_string(j.get<std::uint64_t>())));
    return Scalar(j.get<long>());
  }
  if (!j.is_string()) w.fail("expected a rational literal");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const InputError& e) {
    w.fail(e.what());
  }
}

std::size_t read_index(const json& j, std::size_t bound, const Where& w) {
  if (!j.is_number_unsigned()) w.fail("expected a 1-based index");
  const auto i = j.get<std::uint64_t>();
  if (i < 1 || i > bound) {
    w.fail("index " + std::to_string(i) + " out of range [1, " + std::to_string(bound) + "]");
  }
  return static_cast<std::size_t>(i - 1);
}

// Records [x, y, z, q] with per-position bounds; returns the 0-based triples
// and values, rejecting repeated keys.
template <typename Sink>
void read_records(const json& j, const Where& w, std::array<std::size_t, 3> bounds, Sink sink) {
  if (!j.is_array()) w.fail("expected a list of records");
  std::set<std::array<std::size_t, 3>> seen;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto wr = w.at(r);
    const auto& rec = j[r];
    if (!rec.is_array() || rec.size() != 4) wr.fail("expected a record [index, index, index, value]");
    std::array<std::size_t, 3> key{};
    for (std::size_t p = 0; p < 3; ++p) key[p] = read_index(rec[p], bounds[p], wr.at(p));
    if (!seen.insert(key).second) wr.fail("duplicate record");
    sink(key, read_scalar(rec[3], wr.at(3)));
  }
}

T3 read_tensor(const json& j, const Where& w, std::size_t n) {
  T3 c = T3::cube(n);
  read_records(j, w, {n, n, n}, [&](auto key, const Scalar& q) { c.set(key[0], key[1], key[2], q); });
  return c;
}

// Comultiplication records [k, i, j, q] land in f(i, j, k).
T3 read_comul(const json& j, const Where& w, std::size_t n) {
  T3 f = T3::cube(n);
  read_records(j, w, {n, n, n}, [&](auto key, const Scalar& q) { f.set(key[1], key[2], key[0], q); });
  return f;
}

std::vector<Mat> read_action(const json& j, const Where& w, std::size_t count, std::size_t vdim) {
  std::vector<Mat> mats(count, Mat::zero(vdim, vdim));
  read_records(j, w, {count, vdim, vdim}, [&](auto key, const Scalar& q) { mats[key[0]](key[2], key[1]) = q; });
  return mats;
}

Algebra read_algebra(const json& j, const Where& w) {
  require_object(j, w, {"dim", "mul"}, {"name"});
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) w.field("name").fail("expected a string");
    name = j["name"].get<std::string>();
  }
  const auto n = read_natural(j["dim"], w.field("dim"));
  return Algebra(read_tensor(j["mul"], w.field("mul"), n), std::move(name));
}

ordered_json records(const T3& t, std::array<std::size_t, 3> order) {
  // order gives, for each output position, which tensor coordinate it shows.
  std::vector<std::pair<std::array<std::size_t, 3>, Scalar>> rows;
  t.for_each_nonzero([&](std::size_t i, std::size_t j, std::size_t k, const Scalar& q) {
    const std::array<std::size_t, 3> ijk{i, j, k};
    rows.push_back({{ijk[order[0]], ijk[order[1]], ijk[order[2]]}, q});
  });
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  ordered_json out = ordered_json::array();
  for (const auto& [key, q] : rows) out.push_back({key[0] + 1, key[1] + 1, key[2] + 1, q.str()});
  return out;
}

ordered_json action_records(std::span<const Mat> mats) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < mats.size(); ++i) {
    for (std::size_t a = 0; a < mats[i].cols(); ++a) {
      for (std::size_t b = 0; b < mats[i].rows(); ++b) {
        if (!mats[i](b, a).is_zero()) out.push_back({i + 1, a + 1, b + 1, mats[i](b, a).str()});
      }
    }
  }
  return out;
}

ordered_json algebra_json(const Algebra& a) {
  ordered_json out = ordered_json::object();
  if (!a.name().empty()) out["name"] = a.name();
  out["dim"] = a.dim();
  out["mul"] = records(a.constants(), {0, 1, 2});
  return out;
}

// Two-space indentation, with arrays of scalars (records, index tuples) kept
// on one line.
void pretty(const ordered_json& j, std::size_t indent, std::string& out) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      out += (first ? "" : ",\n") + pad + ordered_json(key).dump() + ": ";
      pretty(value, indent + 2, out);
      first = false;
    }
    out += "\n" + std::string(indent, ' ') + "}";
    return;
  }
  if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const auto& e) { return e.is_primitive(); });
    if (j.empty() || flat) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += (i ? ",\n" : "") + pad;
      pretty(j[i], indent + 2, out);
    }
    out += "\n" + std::string(indent, ' ') + "]";
    return;
  }
  out += j.dump();
}

std::string dump(const ordered_json& j) {
  std::string out;
  pretty(j, 0, out);
  return out + "\n";
}

ordered_json report_json(const Report& r) {
  ordered_json out = ordered_json::object();
  out["subject"] = r.subject;
  out["verdict"] = r.verdict() ? "pass" : "fail";
  ordered_json items = ordered_json::array();
  for (const auto& item : r.items) {
    ordered_json it = ordered_json::object();
    it["name"] = item.name;
    it["tag"] = item.tag;
    it["pass"] = item.result.pass;
    if (item.result.violation) {
      const auto& v = *item.result.violation;
      ordered_json index = ordered_json::array();
      for (auto i : v.index) index.push_back(i + 1);
      it["violation"] = {{"index", index}, {"lhs", v.lhs}, {"rhs", v.rhs}};
    }
    items.push_back(std::move(it));
  }
  out["items"] = std::move(items);
  return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path.string() + ": cannot write file");
  out << text;
}

Algebra parse_algebra(std::string_view text, std::string_view source) {
  const Where w{std::string(source), ""};
  return read_algebra(parse_strict(text, w.source), w);
}

std::string serialize_algebra(const Algebra& a) { return dump(algebra_json(a)); }

Bimodule parse_bimodule(std::string_view text, const Algebra& base, std::string_view source) {
  const Where w{std::string(source), ""};
  const auto j = parse_strict(text, w.source);
  require_object(j, w, {"vdim", "l", "r"});
  const auto vdim = read_natural(j["vdim"], w.field("vdim"));
  auto l = read_action(j["l"], w.field("l"), base.dim(), vdim);
  auto r = read_action(j["r"], w.field("r"), base.dim(), vdim);
  return Bimodule::make(base, std::move(l), std::move(r), vdim);
}

std::string serialize_bimodule(const Bimodule& m) {
  ordered_json out = ordered_json::object();
  out["vdim"] = m.vdim();
  out["l"] = action_records(m.l());
  out["r"] = action_records(m.r());
  return dump(out);
}

CsMatchedPair parse_matched_pair(std::string_view text, std::string_view source) {
  const Where w{std::string(source), ""};
  const auto j = parse_strict(text, w.source);
  require_object(j, w, {"a", "b", "la", "ra", "lb", "rb"});
  CsMatchedPair p;
  p.a = read_algebra(j["a"], w.field("a"));
  p.b = read_algebra(j["b"], w.field("b"));
  p.la = read_action(j["la"], w.field("la"), p.a.dim(), p.b.dim());
  p.ra = read_action(j["ra"], w.field("ra"), p.a.dim(), p.b.dim());
  p.lb = read_action(j["lb"], w.field("lb"), p.b.dim(), p.a.dim());
  p.rb = read_action(j["rb"], w.field("rb"), p.b.dim(), p.a.dim());
  return p;
}

std::string serialize_matched_pair(const CsMatchedPair& p) {
  ordered_json out = ordered_json::object();
  out["a"] = algebra_json(p.a);
  out["b"] = algebra_json(p.b);
  out["la"] = action_records(p.la);
  out["ra"] = action_records(p.ra);
  out["lb"] = action_records(p.lb);
  out["rb"] = action_records(p.rb);
  return dump(out);
}

Bialgebra parse_bialgebra(std::string_view text, std::string_view source) {
  const Where w{std::string(source), ""};
  const auto j = parse_strict(text, w.source);
  require_object(j, w, {"dim", "mul", "comul"}, {"name"});
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) w.field("name").fail("expected a string");
    name = j["name"].get<std::string>();
  }
  const auto n = read_natural(j["dim"], w.field("dim"));
  return Bialgebra(read_tensor(j["mul"], w.field("mul"), n), read_comul(j["comul"], w.field("comul"), n),
                   std::move(name));
}

std::string serialize_bialgebra(const Bialgebra& bg) {
  ordered_json out = ordered_json::object();
  if (!bg.name.empty()) out["name"] = bg.name;
  out["dim"] = bg.dim();
  out["mul"] = records(bg.c, {0, 1, 2});
  out["comul"] = records(bg.f, {2, 0, 1});
  return dump(out);
}

std::string serialize_report(const Report& r) { return dump(report_json(r)); }

std::string serialize_equivalence(const EquivalenceReport& e) {
  ordered_json out = ordered_json::object();
  out["manin_triple"] = e.manin_triple;
  out["lie_matched_pair"] = e.lie_matched_pair;
  out["cs_matched_pair"] = e.cs_matched_pair;
  out["bialgebra"] = e.bialgebra;
  out["consistent"] = e.consistent();
  out["reports"] = {report_json(e.manin), report_json(e.lie), report_json(e.cs), report_json(e.bi)};
  return dump(out);
}

std::string render_report(const Report& r) {
  std::string out = r.subject + ": " + (r.verdict() ? "PASS" : "FAIL") + "\n";
  for (const auto& item : r.items) {
    out += "  [" + std::string(item.result.pass ? "ok" : "FAIL") + "] " + item.name + "  (" + item.tag + ")\n";
    if (item.result.violation) {
      const auto& v = *item.result.violation;
      std::string index;
      for (std::size_t p = 0; p < v.index.size(); ++p) {
        index += (p ? ", " : "") + std::to_string(v.index[p] + 1);
      }
      out += "        at (" + index + "): lhs = " + v.lhs + ", rhs = " + v.rhs + "\n";
    }
  }
  return out;
}

}  // namespace csa::io
