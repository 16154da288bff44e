#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "riordan/rat.hpp"

namespace riordan {

class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One known sequence: OEIS id, its leading terms, and where we got them.
struct SeqFixture {
  enum class Source { vendored, cached, live };

  std::string id;           // matches A followed by six digits
  std::vector<Int> terms;   // never empty
  Source source = Source::vendored;
};

struct HttpResponse {
  int status = 0;
  std::string body;
};

/// Injection point for the live lookup; tests substitute failing or canned
/// transports to prove offline mode never touches the network.
class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  virtual HttpResponse get(const std::string& url, int timeout_ms) = 0;
};

std::shared_ptr<HttpTransport> make_default_transport();

enum class LookupMode { offline, live };

struct OeisOptions {
  std::string fixtures_dir;  // empty: $RIORDAN_OEIS_FIXTURES, else the built-in data dir
  std::string cache_dir;     // empty: $RIORDAN_OEIS_CACHE, else ~/.cache/riordan/oeis
  std::string endpoint = "https://oeis.org";
  int timeout_ms = 10000;
};

class OeisClient {
 public:
  explicit OeisClient(OeisOptions options = {}, std::shared_ptr<HttpTransport> transport = nullptr);

  /// Sequences whose terms contain the query as a contiguous run. Offline mode
  /// consults only vendored fixtures and the local cache; live mode queries
  /// the OEIS search endpoint and caches every result. Requires >= 4 terms.
  std::vector<SeqFixture> match(const std::vector<Int>& terms, LookupMode mode);

  const OeisOptions& options() const { return options_; }

 private:
  std::vector<SeqFixture> local_fixtures() const;
  std::vector<SeqFixture> live_lookup(const std::vector<Int>& terms);
  void cache_store(const SeqFixture& fixture) const;

  OeisOptions options_;
  std::shared_ptr<HttpTransport> transport_;
};

/// True when `run` occurs in `terms` as a contiguous block.
bool contains_run(const std::vector<Int>& terms, const std::vector<Int>& run);

SeqFixture fixture_from_json(const std::string& text);
std::string fixture_to_json(const SeqFixture& fixture);

}  // namespace riordan
