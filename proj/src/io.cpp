#include "pmw/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "pmw/error.hpp"

namespace pmw::io {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Non-empty, non-comment lines, trimmed.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    raw = trim(raw);
    if (raw.empty() || raw.front() == '#') continue;
    out.push_back({number, raw});
  }
  return out;
}

[[noreturn]] void fail(std::string_view source, int line, const std::string& message) {
  std::ostringstream os;
  os << source << ':' << line << ": " << message;
  throw Error(ErrorCode::ParseError, os.str());
}

std::optional<long long> to_int(std::string_view s) {
  s = trim(s);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::string_view> tokens(std::string_view s, std::string_view separators = " \t,") {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(separators, pos);
    if (start == std::string_view::npos) break;
    auto end = s.find_first_of(separators, start);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    pos = end;
  }
  return out;
}

std::optional<std::pair<std::string_view, std::string_view>> key_value(std::string_view line) {
  const auto eq = line.find('=');
  if (eq == std::string_view::npos) return std::nullopt;
  return std::make_pair(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
}

std::optional<json> as_json_document(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos || text[first] != '{') return std::nullopt;
  if (!json::accept(text)) return std::nullopt;
  json j = json::parse(text);
  if (!j.is_object() || !j.contains("type")) return std::nullopt;
  return j;
}

[[noreturn]] void json_fail(const std::string& message) { throw Error(ErrorCode::ParseError, "json: " + message); }

int json_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) json_fail(std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

Mask ideal_from_json(const json& j, int n) {
  if (!j.is_array()) json_fail("ideal must be an array of elements");
  Mask m = 0;
  for (const auto& e : j) {
    if (!e.is_number_integer()) json_fail("ideal element must be an integer");
    const int x = e.get<int>();
    if (x < 1 || x > n) json_fail("ideal element " + std::to_string(x) + " out of range");
    m |= Mask{1} << (x - 1);
  }
  return m;
}

Mask parse_ideal_token(std::string_view tok, int n, std::string_view source, int line) {
  if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}') fail(source, line, "expected {a,b,...}, got '" + std::string(tok) + "'");
  Mask m = 0;
  for (auto t : tokens(tok.substr(1, tok.size() - 2))) {
    auto v = to_int(t);
    if (!v || *v < 1 || *v > n) fail(source, line, "bad ideal element '" + std::string(t) + "'");
    m |= Mask{1} << (*v - 1);
  }
  return m;
}

// Splits "{1,2} {3}" into brace groups, tolerating spaces inside braces.
std::vector<std::string_view> brace_groups(std::string_view s, std::string_view source, int line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    pos = s.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    if (s[pos] != '{') fail(source, line, "expected '{'");
    const auto close = s.find('}', pos);
    if (close == std::string_view::npos) fail(source, line, "unterminated '{'");
    out.push_back(s.substr(pos, close - pos + 1));
    pos = close + 1;
  }
  return out;
}

}  // namespace

std::string format_ideal(Mask ideal) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (ideal >> i & 1u) {
      if (!first) s += ',';
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

std::string format_permutation(const Permutation& sigma) {
  std::string s;
  for (std::size_t i = 0; i < sigma.image.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(sigma.image[i] + 1);
  }
  return s;
}

Poset read_poset(std::string_view text, std::string_view source) {
  if (auto j = as_json_document(text)) return poset_from_json(*j);
  std::optional<int> n;
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [number, line] : content_lines(text)) {
    if (auto kv = key_value(line)) {
      if (kv->first != "n") fail(source, number, "unknown key '" + std::string(kv->first) + "'");
      if (n) fail(source, number, "duplicate n=");
      auto v = to_int(kv->second);
      if (!v || *v < 0 || *v > kMaxGroundSet) fail(source, number, "n must be an integer in [0, 16]");
      n = static_cast<int>(*v);
      continue;
    }
    const auto lt = line.find('<');
    if (lt == std::string_view::npos) fail(source, number, "expected n=<int> or a<b");
    if (!n) fail(source, number, "relation before n=");
    auto a = to_int(line.substr(0, lt));
    auto b = to_int(line.substr(lt + 1));
    if (!a || !b) fail(source, number, "relation elements must be integers");
    if (*a < 1 || *a > *n || *b < 1 || *b > *n) fail(source, number, "element out of range [1, n]");
    if (*a == *b) fail(source, number, "reflexive pair a<a");
    pairs.emplace_back(static_cast<int>(*a), static_cast<int>(*b));
  }
  if (!n) fail(source, 0, "missing n=");
  return Poset::from_covers(*n, pairs);
}

Field field_for(std::uint32_t q, const std::optional<std::vector<std::uint32_t>>& modulus_leading_first) {
  if (q < 2 || q > Field::kMaxOrder) throw Error(ErrorCode::OutOfRange, "field order out of range");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  for (std::uint32_t t = q; t > 1; t /= p) {
    if (t % p != 0) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
    ++m;
  }
  if (!modulus_leading_first) return Field::of_order(q);
  std::vector<std::uint32_t> modulus(modulus_leading_first->rbegin(), modulus_leading_first->rend());
  return Field::make(p, m, modulus);
}

GeneratorMatrix read_code(std::string_view text, std::string_view source) {
  if (auto j = as_json_document(text)) return code_from_json(*j);
  std::optional<long long> q, n, k;
  std::optional<std::vector<std::uint32_t>> modulus;
  std::vector<std::pair<int, std::string_view>> row_lines;
  for (const auto& [number, line] : content_lines(text)) {
    if (auto kv = key_value(line)) {
      const auto [key, value] = *kv;
      if (!row_lines.empty()) fail(source, number, "header line after matrix rows");
      if (key == "modulus") {
        std::vector<std::uint32_t> coeffs;
        for (auto t : tokens(value)) {
          auto c = to_int(t);
          if (!c || *c < 0) fail(source, number, "bad modulus coefficient '" + std::string(t) + "'");
          coeffs.push_back(static_cast<std::uint32_t>(*c));
        }
        modulus = std::move(coeffs);
        continue;
      }
      auto v = to_int(value);
      if (!v) fail(source, number, "value of '" + std::string(key) + "' must be an integer");
      if (key == "q") q = v;
      else if (key == "n") n = v;
      else if (key == "k") k = v;
      else fail(source, number, "unknown key '" + std::string(key) + "'");
      continue;
    }
    row_lines.emplace_back(number, line);
  }
  if (!q || !n || !k) fail(source, 0, "missing q=, n= or k=");
  if (*n < 0 || *n > kMaxGroundSet) fail(source, 0, "n must be in [0, 16]");
  if (*k < 0) fail(source, 0, "k must be nonnegative");
  if (*q < 2 || *q > Field::kMaxOrder) fail(source, 0, "q out of range");
  if (static_cast<long long>(row_lines.size()) != *k)
    fail(source, row_lines.empty() ? 0 : row_lines.back().first,
         "expected " + std::to_string(*k) + " rows, found " + std::to_string(row_lines.size()));
  Field field = field_for(static_cast<std::uint32_t>(*q), modulus);
  std::vector<Vector> rows;
  for (const auto& [number, line] : row_lines) {
    Vector row;
    for (auto t : tokens(line)) {
      auto v = to_int(t);
      if (!v || *v < 0 || *v >= *q) fail(source, number, "entry '" + std::string(t) + "' not in [0, q)");
      row.push_back(static_cast<Element>(*v));
    }
    if (static_cast<long long>(row.size()) != *n)
      fail(source, number, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(*n));
    rows.push_back(std::move(row));
  }
  return GeneratorMatrix(field, static_cast<int>(*n), std::move(rows));
}

std::vector<Permutation> read_subgroup(std::string_view text, int n, std::string_view source) {
  std::vector<Permutation> group;
  for (const auto& [number, line] : content_lines(text)) {
    Permutation sigma;
    for (auto t : tokens(line)) {
      auto v = to_int(t);
      if (!v || *v < 1 || *v > n) fail(source, number, "image '" + std::string(t) + "' not in [1, n]");
      sigma.image.push_back(static_cast<int>(*v) - 1);
    }
    if (sigma.size() != n) fail(source, number, "permutation must list " + std::to_string(n) + " images");
    std::vector<int> sorted = sigma.image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail(source, number, "repeated image");
    group.push_back(std::move(sigma));
  }
  if (std::find(group.begin(), group.end(), Permutation::identity(n)) == group.end())
    group.push_back(Permutation::identity(n));
  std::sort(group.begin(), group.end());
  group.erase(std::unique(group.begin(), group.end()), group.end());
  return group;
}

IdealPartition read_partition(std::string_view text, const Poset& poset, std::string_view source) {
  if (auto j = as_json_document(text)) {
    IdealPartition p = partition_from_json(*j);
    if (!(p.poset() == poset)) throw Error(ErrorCode::PosetMismatch, "partition file describes a different poset");
    return p;
  }
  std::vector<std::vector<Mask>> blocks;
  for (const auto& [number, line] : content_lines(text)) {
    std::vector<Mask> block;
    for (auto g : brace_groups(line, source, number)) block.push_back(parse_ideal_token(g, poset.size(), source, number));
    blocks.push_back(std::move(block));
  }
  return IdealPartition::from_blocks(poset, blocks, RelationKind::Custom);
}

json ideal_to_json(Mask ideal) {
  json a = json::array();
  for (int i = 0; i < 32; ++i)
    if (ideal >> i & 1u) a.push_back(i + 1);
  return a;
}

json poset_to_json(const Poset& poset) {
  json rel = json::array();
  for (auto [a, b] : poset.covers()) rel.push_back({a, b});
  return {{"type", "poset"}, {"n", poset.size()}, {"covers", rel}};
}

json code_to_json(const GeneratorMatrix& g) {
  const Field& f = g.field();
  json j = {{"type", "code"}, {"q", f.order()}, {"n", g.length()}, {"k", g.num_rows()}};
  if (f.degree() > 1) j["modulus"] = std::vector<std::uint32_t>(f.modulus().rbegin(), f.modulus().rend());
  j["rows"] = g.rows();
  return j;
}

json partition_to_json(const IdealPartition& partition) {
  json blocks = json::array();
  for (std::size_t b = 0; b < partition.num_blocks(); ++b) {
    json block = json::array();
    for (Mask m : partition.block_ideals(b)) block.push_back(ideal_to_json(m));
    blocks.push_back(block);
  }
  return {{"type", "partition"},
          {"kind", std::string(to_string(partition.kind()))},
          {"poset", poset_to_json(partition.poset())},
          {"blocks", blocks}};
}

Poset poset_from_json(const json& j) {
  const json& p = j.value("type", "") == "poset" ? j : (j.contains("poset") ? j["poset"] : j);
  if (p.value("type", "") != "poset") json_fail("no poset object");
  const int n = json_int(p, "n");
  if (n < 0 || n > kMaxGroundSet) json_fail("n out of range");
  std::vector<std::pair<int, int>> pairs;
  if (p.contains("covers")) {
    for (const auto& e : p["covers"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        json_fail("cover must be a pair of integers");
      pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return Poset::from_covers(n, pairs);
}

GeneratorMatrix code_from_json(const json& doc) {
  const json& j = doc.value("type", "") != "code" && doc.contains("code") ? doc["code"] : doc;
  if (j.value("type", "") != "code") json_fail("not a code document");
  const int q = json_int(j, "q");
  const int n = json_int(j, "n");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus")) modulus = j["modulus"].get<std::vector<std::uint32_t>>();
  if (q < 2) json_fail("q out of range");
  Field field = field_for(static_cast<std::uint32_t>(q), modulus);
  std::vector<Vector> rows;
  if (j.contains("rows")) rows = j["rows"].get<std::vector<Vector>>();
  if (j.contains("k") && json_int(j, "k") != static_cast<int>(rows.size())) json_fail("k does not match row count");
  return GeneratorMatrix(field, n, std::move(rows));
}

IdealPartition partition_from_json(const json& doc) {
  const json& j = doc.value("type", "") != "partition" && doc.contains("partition") ? doc["partition"] : doc;
  if (j.value("type", "") != "partition") json_fail("not a partition document");
  const Poset poset = poset_from_json(j["poset"]);
  const std::string kind = j.value("kind", "custom");
  RelationKind k = RelationKind::Custom;
  for (RelationKind r : {RelationKind::Cardinality, RelationKind::Automorphism, RelationKind::Isomorphism})
    if (to_string(r) == kind) k = r;
  std::vector<std::vector<Mask>> blocks;
  if (!j.contains("blocks") || !j["blocks"].is_array()) json_fail("missing blocks");
  for (const auto& b : j["blocks"]) {
    std::vector<Mask> block;
    for (const auto& ideal : b) block.push_back(ideal_from_json(ideal, poset.size()));
    blocks.push_back(std::move(block));
  }
  return IdealPartition::from_blocks(poset, blocks, k);
}

std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace pmw::io
