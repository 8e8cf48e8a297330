#include "sldist/cli/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <bit>
#include <cstring>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace sldist::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

static_assert(std::endian::native == std::endian::little, "cache payload assumes a little-endian host");

void put(std::string& out, std::int64_t v) { out.append(reinterpret_cast<const char*>(&v), sizeof v); }

class PayloadReader {
 public:
  explicit PayloadReader(std::string_view data) : data_(data) {}

  std::int64_t next() {
    if (pos_ + 8 > data_.size()) throw std::runtime_error("payload truncated");
    std::int64_t v;
    std::memcpy(&v, data_.data() + pos_, 8);
    pos_ += 8;
    return v;
  }
  bool done() const { return pos_ == data_.size(); }

 private:
  std::string_view data_;
  std::size_t pos_ = 0;
};

std::string encode_payload(const chartab::CharTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (const auto& x : table.row(i)) {
      put(out, static_cast<std::int64_t>(x.terms.size()));
      for (const auto& [a, m] : x.terms) {
        put(out, a);
        put(out, m);
      }
    }
  }
  return out;
}

ordered_json header_json(const CacheKey& key, const chartab::CharTable& table, const std::string& payload) {
  const auto& cls = table.classes();
  ordered_json h;
  h["schema"] = kCacheSchema;
  h["code_version"] = kCodeVersion;
  h["group"] = groups::to_string(key.kind);
  h["n"] = key.n;
  h["p"] = key.p;
  h["k"] = key.k;
  h["seed"] = key.seed;
  h["base_modulus"] = key.base_modulus;
  h["ext_modulus"] = key.ext_modulus;
  h["element_count"] = cls.group_order;
  h["class_count"] = cls.size();
  h["class_digest"] = class_digest(cls);
  h["exponent"] = cls.exponent;
  h["prime"] = table.prime();
  h["payload_bytes"] = payload.size();
  h["payload_sha256"] = sha256_hex(payload.data(), payload.size());
  return h;
}

}  // namespace

fs::path resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env != '\0') return env;
  return ".sldist-cache";
}

std::string sha256_hex(const void* data, std::size_t size) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data, size, md, &len, EVP_sha256(), nullptr) != 1) throw std::runtime_error("SHA-256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string class_digest(const groups::ConjugacyData& classes) {
  std::string buf;
  for (auto c : classes.class_of) put(buf, c);
  for (auto r : classes.representative) put(buf, r);
  for (auto s : classes.class_size) put(buf, static_cast<std::int64_t>(s));
  return sha256_hex(buf.data(), buf.size());
}

CacheKey CacheKey::of(const groups::GroupView& view, std::uint64_t seed) {
  const auto& t = view.group().tower();
  CacheKey key;
  key.kind = view.kind();
  key.n = view.group().n();
  key.p = t.p();
  key.k = t.k();
  key.seed = seed;
  key.base_modulus = t.base_modulus();
  for (auto c : t.ext_modulus()) key.ext_modulus.push_back(c.code);
  return key;
}

std::string CacheKey::file_name() const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  std::ostringstream s;
  s << groups::to_string(kind) << "_n" << n << "_q" << q << "_s" << seed << ".v" << kCacheSchema << ".table";
  return s.str();
}

std::string encode_table(const CacheKey& key, const chartab::CharTable& table) {
  const auto payload = encode_payload(table);
  return header_json(key, table, payload).dump() + "\n" + payload;
}

CacheLoad load_table(const fs::path& path, const CacheKey& key, const groups::GroupView& view,
                     std::shared_ptr<const groups::ConjugacyData> classes) {
  CacheLoad out;
  std::ifstream in(path, std::ios::binary);
  if (!in) return out;
  const std::string content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  out.status = CacheStatus::Corrupt;
  try {
    const auto nl = content.find('\n');
    if (nl == std::string::npos) throw std::runtime_error("no header line");
    const auto h = ordered_json::parse(content.substr(0, nl));
    const std::string_view payload(content.data() + nl + 1, content.size() - nl - 1);
    auto expect = [&h](const char* field, const ordered_json& value) {
      if (!h.contains(field) || h.at(field) != value) throw std::runtime_error(std::string("header mismatch: ") + field);
    };
    expect("schema", kCacheSchema);
    expect("code_version", kCodeVersion);
    expect("group", groups::to_string(key.kind));
    expect("n", key.n);
    expect("p", key.p);
    expect("k", key.k);
    expect("seed", key.seed);
    expect("base_modulus", key.base_modulus);
    expect("ext_modulus", key.ext_modulus);
    expect("element_count", classes->group_order);
    expect("class_count", classes->size());
    expect("class_digest", class_digest(*classes));
    expect("exponent", classes->exponent);
    expect("payload_bytes", payload.size());
    expect("payload_sha256", sha256_hex(payload.data(), payload.size()));

    const std::uint64_t e = classes->exponent;
    PayloadReader r(payload);
    std::vector<std::vector<chartab::RootSum>> rows(classes->size(), std::vector<chartab::RootSum>(classes->size()));
    for (auto& row : rows) {
      for (auto& x : row) {
        const auto terms = r.next();
        if (terms < 0 || static_cast<std::uint64_t>(terms) > e) throw std::runtime_error("bad term count");
        for (std::int64_t t = 0; t < terms; ++t) {
          const auto a = r.next(), m = r.next();
          if (a < 0 || static_cast<std::uint64_t>(a) >= e || m <= 0 || m > UINT32_MAX)
            throw std::runtime_error("bad root sum term");
          x.terms.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(m));
        }
      }
    }
    if (!r.done()) throw std::runtime_error("trailing payload");
    chartab::CharTable table(classes, h.at("prime").get<std::uint64_t>(), std::move(rows));
    const auto cert = chartab::verify_table(view, table);
    if (!cert.ok()) throw std::runtime_error("reloaded table fails verification: " + cert.failure);
    out.status = CacheStatus::Hit;
    out.table.emplace(std::move(table));
  } catch (const std::exception& ex) {
    out.reason = ex.what();
  }
  return out;
}

void store_table(const fs::path& path, const CacheKey& key, const chartab::CharTable& table) {
  fs::create_directories(path.parent_path());
  const auto bytes = encode_table(key, table);
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

chartab::CharTable cached_table(const fs::path& dir, const groups::GroupView& view,
                                std::shared_ptr<const groups::ConjugacyData> classes, std::uint64_t seed,
                                const chartab::TableOptions& options, CacheEvent* event) {
  const auto key = CacheKey::of(view, seed);
  const auto path = dir / key.file_name();
  auto load = load_table(path, key, view, classes);
  if (event != nullptr) *event = {key.kind, path, load.status, load.reason};
  if (load.status == CacheStatus::Hit) return std::move(*load.table);
  auto table = chartab::dixon_schneider(view, std::move(classes), options);
  store_table(path, key, table);
  return table;
}

}  // namespace sldist::cli
