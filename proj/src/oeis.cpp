#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <json.hpp>

#include "riordan/oeis.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#ifndef RIORDAN_DATA_DIR
#define RIORDAN_DATA_DIR ""
#endif

namespace riordan {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::regex kIdPattern("^A[0-9]{6}$");

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

std::string default_cache_dir() {
  const char* explicit_dir = std::getenv("RIORDAN_OEIS_CACHE");
  if (explicit_dir && *explicit_dir) return explicit_dir;
  const char* xdg = std::getenv("XDG_CACHE_HOME");
  if (xdg && *xdg) return std::string(xdg) + "/riordan/oeis";
  return env_or("HOME", ".") + "/.cache/riordan/oeis";
}

std::string source_name(SeqFixture::Source s) {
  switch (s) {
    case SeqFixture::Source::vendored: return "vendored";
    case SeqFixture::Source::cached: return "cached";
    case SeqFixture::Source::live: return "live";
  }
  return "vendored";
}

SeqFixture::Source source_from_name(const std::string& s) {
  if (s == "cached") return SeqFixture::Source::cached;
  if (s == "live") return SeqFixture::Source::live;
  return SeqFixture::Source::vendored;
}

std::vector<SeqFixture> load_dir(const std::string& dir, SeqFixture::Source source) {
  std::vector<SeqFixture> fixtures;
  if (dir.empty() || !fs::is_directory(dir)) return fixtures;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      SeqFixture f = fixture_from_json(buffer.str());
      f.source = source;
      fixtures.push_back(std::move(f));
    } catch (const std::exception&) {
      // unreadable cache entries are ignored, not fatal
    }
  }
  return fixtures;
}

class HttplibTransport : public HttpTransport {
 public:
  HttpResponse get(const std::string& url, int timeout_ms) override {
    const auto split = url.find('/', url.find("//") + 2);
    const std::string host = split == std::string::npos ? url : url.substr(0, split);
    const std::string path = split == std::string::npos ? "/" : url.substr(split);
    httplib::Client client(host);
    client.set_connection_timeout(0, timeout_ms * 1000);
    client.set_read_timeout(timeout_ms / 1000, (timeout_ms % 1000) * 1000);
    client.set_follow_location(true);
    auto result = client.Get(path);
    if (!result) throw NetworkError("request to " + url + " failed: " + httplib::to_string(result.error()));
    return HttpResponse{result->status, result->body};
  }
};

}  // namespace

std::shared_ptr<HttpTransport> make_default_transport() {
  return std::make_shared<HttplibTransport>();
}

bool contains_run(const std::vector<Int>& terms, const std::vector<Int>& run) {
  if (run.empty() || run.size() > terms.size()) return false;
  for (std::size_t start = 0; start + run.size() <= terms.size(); ++start) {
    bool all = true;
    for (std::size_t i = 0; i < run.size(); ++i)
      if (terms[start + i] != run[i]) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

SeqFixture fixture_from_json(const std::string& text) {
  const json doc = json::parse(text);
  SeqFixture f;
  f.id = doc.at("id").get<std::string>();
  if (!std::regex_match(f.id, kIdPattern))
    throw std::invalid_argument("fixture id \"" + f.id + "\" is not an OEIS id");
  for (const auto& t : doc.at("terms")) f.terms.emplace_back(t.get<std::string>());
  if (f.terms.empty()) throw std::invalid_argument("fixture " + f.id + " has no terms");
  f.source = source_from_name(doc.value("source", "vendored"));
  return f;
}

std::string fixture_to_json(const SeqFixture& fixture) {
  json terms = json::array();
  for (const auto& t : fixture.terms) terms.push_back(t.get_str());
  return json{{"id", fixture.id}, {"terms", std::move(terms)}, {"source", source_name(fixture.source)}}
      .dump();
}

OeisClient::OeisClient(OeisOptions options, std::shared_ptr<HttpTransport> transport)
    : options_(std::move(options)), transport_(std::move(transport)) {
  if (options_.fixtures_dir.empty())
    options_.fixtures_dir = env_or("RIORDAN_OEIS_FIXTURES", std::string(RIORDAN_DATA_DIR) + "/oeis");
  if (options_.cache_dir.empty()) options_.cache_dir = default_cache_dir();
}

std::vector<SeqFixture> OeisClient::local_fixtures() const {
  std::vector<SeqFixture> all = load_dir(options_.fixtures_dir, SeqFixture::Source::vendored);
  for (auto& f : load_dir(options_.cache_dir, SeqFixture::Source::cached)) {
    const bool known = std::any_of(all.begin(), all.end(),
                                   [&](const SeqFixture& g) { return g.id == f.id; });
    if (!known) all.push_back(std::move(f));
  }
  return all;
}

void OeisClient::cache_store(const SeqFixture& fixture) const {
  std::error_code ec;
  fs::create_directories(options_.cache_dir, ec);
  const fs::path final_path = fs::path(options_.cache_dir) / (fixture.id + ".json");
  if (fs::exists(final_path)) return;  // write-once per key
  const fs::path tmp_path = final_path.string() + ".tmp";
  {
    std::ofstream out(tmp_path);
    SeqFixture cached = fixture;
    cached.source = SeqFixture::Source::cached;
    out << fixture_to_json(cached);
  }
  fs::rename(tmp_path, final_path, ec);
}

std::vector<SeqFixture> OeisClient::live_lookup(const std::vector<Int>& terms) {
  std::string query;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) query += ",";
    query += terms[i].get_str();
  }
  if (!transport_) transport_ = make_default_transport();
  const HttpResponse response =
      transport_->get(options_.endpoint + "/search?q=" + query + "&fmt=json", options_.timeout_ms);
  if (response.status != 200)
    throw NetworkError("OEIS search returned HTTP " + std::to_string(response.status));
  std::vector<SeqFixture> found;
  try {
    const json doc = json::parse(response.body);
    const json results = doc.contains("results") && doc["results"].is_array() ? doc["results"]
                                                                              : json::array();
    for (const auto& item : results) {
      SeqFixture f;
      const long number = item.at("number").get<long>();
      char id[8];
      std::snprintf(id, sizeof id, "A%06ld", number);
      f.id = id;
      std::stringstream data(item.at("data").get<std::string>());
      std::string term;
      while (std::getline(data, term, ',')) f.terms.emplace_back(term);
      if (f.terms.empty()) continue;
      f.source = SeqFixture::Source::live;
      found.push_back(std::move(f));
    }
  } catch (const json::exception& e) {
    throw NetworkError(std::string("OEIS search returned unparseable JSON: ") + e.what());
  }
  for (const auto& f : found) cache_store(f);
  return found;
}

std::vector<SeqFixture> OeisClient::match(const std::vector<Int>& terms, LookupMode mode) {
  if (terms.size() < 4)
    throw std::invalid_argument("oeis match: need at least 4 terms");
  std::vector<SeqFixture> candidates =
      mode == LookupMode::offline ? local_fixtures() : live_lookup(terms);
  std::vector<SeqFixture> matched;
  for (auto& f : candidates)
    if (contains_run(f.terms, terms)) matched.push_back(std::move(f));
  std::sort(matched.begin(), matched.end(),
            [](const SeqFixture& a, const SeqFixture& b) { return a.id < b.id; });
  return matched;
}

}  // namespace riordan
