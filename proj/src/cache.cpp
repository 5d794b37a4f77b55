#include "descent/cache.hpp"

#include <fstream>
#include <sstream>

#include "descent/error.hpp"
#include "json.hpp"

namespace descent {

namespace {

using nlohmann::json;

json poly_json(const IntegerPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

IntegerPolynomial poly_from(const json& a) {
  std::vector<Integer> coeffs;
  for (const auto& c : a) coeffs.push_back(parse_integer(c.get<std::string>()));
  return IntegerPolynomial(std::move(coeffs));
}

json outcome_json(const TwistOutcome& o) {
  json t;
  t["kind"] = twist_kind_name(o.twist.kind);
  t["d"] = o.twist.d.get_str();
  t["p"] = o.twist.p;
  t["f"] = poly_json(o.twist.f);
  if (o.twist.model) t["model"] = {o.twist.model->a2.get_str(), o.twist.model->a4.get_str(), o.twist.model->a6.get_str()};
  t["thue"] = {o.twist.thue_a.get_str(), o.twist.thue_b.get_str()};
  json xs = json::array();
  for (const auto& x : o.x_candidates) xs.push_back(x.get_str());
  return json{{"twist", t},
              {"x_candidates", xs},
              {"complete", o.complete},
              {"skipped", o.skipped},
              {"backend", o.backend},
              {"height", o.height},
              {"diagnostics", o.diagnostics}};
}

TwistOutcome outcome_from(const json& j) {
  TwistOutcome o;
  const json& t = j.at("twist");
  auto kind = parse_twist_kind(t.at("kind").get<std::string>());
  if (!kind) throw Error(Errc::CacheCorrupt, "unknown twist kind");
  o.twist.kind = *kind;
  o.twist.d = parse_integer(t.at("d").get<std::string>());
  o.twist.p = t.at("p").get<unsigned>();
  o.twist.f = poly_from(t.at("f"));
  if (t.contains("model")) {
    const json& m = t["model"];
    o.twist.model = WeierstrassModel{parse_integer(m.at(0).get<std::string>()), parse_integer(m.at(1).get<std::string>()),
                                     parse_integer(m.at(2).get<std::string>())};
  }
  o.twist.thue_a = parse_integer(t.at("thue").at(0).get<std::string>());
  o.twist.thue_b = parse_integer(t.at("thue").at(1).get<std::string>());
  for (const auto& x : j.at("x_candidates")) o.x_candidates.push_back(parse_integer(x.get<std::string>()));
  o.complete = j.at("complete").get<bool>();
  o.skipped = j.at("skipped").get<bool>();
  o.backend = j.at("backend").get<std::string>();
  o.height = j.at("height").get<unsigned long>();
  o.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  return o;
}

}  // namespace

TwistCache::TwistCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    json doc = json::parse(ss.str());
    if (!doc.is_object() || doc.value("version", -1) != kVersion)
      throw Error(Errc::CacheCorrupt, "unsupported cache version");
    std::map<std::string, TwistOutcome> loaded;
    for (const auto& [key, value] : doc.at("entries").items()) loaded.emplace(key, outcome_from(value));
    entries_ = std::move(loaded);
  } catch (const std::exception& e) {
    warnings_.push_back("CacheCorrupt: ignoring " + path_.string() + " (" + e.what() + ")");
  }
}

std::optional<TwistOutcome> TwistCache::get(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void TwistCache::put(const std::string& key, const TwistOutcome& outcome) {
  std::lock_guard lock(mutex_);
  entries_[key] = outcome;
  flush_locked();
}

std::size_t TwistCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::vector<std::string> TwistCache::warnings() const {
  std::lock_guard lock(mutex_);
  return warnings_;
}

void TwistCache::flush_locked() const {
  json entries = json::object();
  for (const auto& [key, outcome] : entries_) entries[key] = outcome_json(outcome);
  json doc{{"version", kVersion}, {"entries", entries}};
  auto tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write cache file " + tmp.string());
    out << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, path_);
}

bool cache_entry_covers(const TwistOutcome& cached, unsigned long requested_height) {
  if (cached.skipped) return false;
  return cached.complete || cached.height >= requested_height;
}

}  // namespace descent
