#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "sawp/message.hpp"

namespace sawp::llm {

enum class Provider { openai, gemini, groq, replay };

const char* to_string(Provider p);
Provider provider_from_string(const std::string& s);

struct ProviderConfig {
    Provider provider = Provider::replay;
    std::string model;
    double temperature = 0.0; // determinism-leaning default
    int max_output_tokens = 4096;
    double timeout_seconds = 60.0;
    int retry_budget = 4; // total attempts; backoff 1 s, 2 s, 4 s between them
    std::filesystem::path transcript_dir; // replay source / record target
    bool record = false;
    bool overwrite = false;
    int requests_per_minute = 0;      // 0 = unlimited
    std::string recorded_at_override; // fixed timestamp for reproducible assets
};

// Stable 256-bit content digest over (provider id, model name, canonicalized
// message script). Transcript metadata is excluded.
std::string digest(const MessageScript& script, Provider provider, const std::string& model);

struct Transcript {
    std::string digest;
    std::string provider;
    std::string model;
    MessageScript messages;
    std::string response;
    std::string recorded_at;
};

// <dir>/<digest>.json; repeated identical requests within one run take
// sequence suffixes <digest>-2.json, <digest>-3.json, ...
std::filesystem::path transcript_path(const std::filesystem::path& dir,
                                      const std::string& digest, int sequence);

void store_transcript(const Transcript& t, const std::filesystem::path& dir, int sequence = 1,
                      bool overwrite = false);

Transcript load_transcript(const std::filesystem::path& file);

struct HttpResponse {
    int status = 0; // 0 = transport failure / timeout
    std::string body;
};

using Headers = std::vector<std::pair<std::string, std::string>>;

// Seam between the gateway and the network; live providers go through it,
// the replay provider never touches it.
class HttpTransport {
public:
    virtual ~HttpTransport() = default;
    virtual HttpResponse post(const std::string& host, const std::string& path,
                              const Headers& headers, const std::string& body,
                              double timeout_seconds) = 0;
};

std::shared_ptr<HttpTransport> tls_transport();

// Scripted response source; used by tools that synthesize transcript sets.
using Completer = std::function<std::string(const MessageScript&)>;

// Thread-safe chat-completion client with record/replay. Identical requests
// within one gateway lifetime are distinguished by arrival order, which is
// what lets a replayed best-of-N run see different responses per attempt.
class Gateway {
public:
    explicit Gateway(ProviderConfig config);
    Gateway(ProviderConfig config, std::shared_ptr<HttpTransport> transport);
    Gateway(ProviderConfig config, Completer completer);

    // Raw response text. Throws AuthError, TimeoutError, RateLimitError,
    // ReplayMissError, DuplicateDigestError.
    std::string complete(const MessageScript& script);

    const ProviderConfig& config() const { return config_; }

private:
    std::string complete_live(const MessageScript& script);
    std::string record_and_return(const MessageScript& script, const std::string& digest_hex,
                                  int sequence, std::string response);
    void rate_limit_wait();

    ProviderConfig config_;
    std::shared_ptr<HttpTransport> transport_;
    Completer completer_;
    std::mutex mutex_;
    std::map<std::string, int> sequence_; // digest -> requests seen this run
};

} // namespace sawp::llm
