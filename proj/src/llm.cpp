#include "sawp/llm.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <deque>
#include <fstream>
#include <sstream>
#include <thread>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <json.hpp>
#include <openssl/evp.h>

#include "sawp/errors.hpp"

namespace sawp::llm {

using nlohmann::json;

const char* to_string(Provider p) {
    switch (p) {
    case Provider::openai: return "openai";
    case Provider::gemini: return "gemini";
    case Provider::groq: return "groq";
    case Provider::replay: return "replay";
    }
    return "?";
}

Provider provider_from_string(const std::string& s) {
    if (s == "openai") return Provider::openai;
    if (s == "gemini") return Provider::gemini;
    if (s == "groq") return Provider::groq;
    if (s == "replay") return Provider::replay;
    throw SchemaError("unknown provider '" + s + "'");
}

std::string digest(const MessageScript& script, Provider provider, const std::string& model) {
    json canon = json::array();
    canon.push_back(to_string(provider));
    canon.push_back(model);
    json msgs = json::array();
    for (const auto& m : script.messages) msgs.push_back(json::array({m.role, m.content}));
    canon.push_back(msgs);
    const std::string bytes = canon.dump();

    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

std::filesystem::path transcript_path(const std::filesystem::path& dir, const std::string& digest,
                                      int sequence) {
    if (sequence <= 1) return dir / (digest + ".json");
    return dir / (digest + "-" + std::to_string(sequence) + ".json");
}

void store_transcript(const Transcript& t, const std::filesystem::path& dir, int sequence,
                      bool overwrite) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto path = transcript_path(dir, t.digest, sequence);
    if (!overwrite && std::filesystem::exists(path))
        throw DuplicateDigestError("transcript already stored: " + path.string());

    json doc;
    doc["digest"] = t.digest;
    doc["provider"] = t.provider;
    doc["model"] = t.model;
    json msgs = json::array();
    for (const auto& m : t.messages.messages)
        msgs.push_back(json{{"role", m.role}, {"content", m.content}});
    doc["messages"] = msgs;
    doc["response"] = t.response;
    doc["recorded_at"] = t.recorded_at;

    std::ofstream out(path);
    if (!out) throw IOError("cannot write transcript " + path.string());
    out << doc.dump(2) << "\n";
}

Transcript load_transcript(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IOError("cannot open transcript " + file.string());
    std::stringstream ss;
    ss << in.rdbuf();
    json doc;
    try {
        doc = json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw SchemaError("transcript " + file.string() + " is not valid JSON: " + e.what());
    }
    for (const char* key : {"digest", "provider", "model", "messages", "response", "recorded_at"})
        if (!doc.contains(key))
            throw SchemaError("transcript " + file.string() + ": missing key '" + key + "'");

    Transcript t;
    t.digest = doc["digest"].get<std::string>();
    t.provider = doc["provider"].get<std::string>();
    t.model = doc["model"].get<std::string>();
    if (!doc["messages"].is_array())
        throw SchemaError("transcript " + file.string() + ": messages must be an array");
    for (const auto& m : doc["messages"])
        t.messages.messages.push_back(
            {m.at("role").get<std::string>(), m.at("content").get<std::string>()});
    t.response = doc["response"].get<std::string>();
    t.recorded_at = doc["recorded_at"].get<std::string>();
    return t;
}

// --- transport --------------------------------------------------------------

namespace {

class TlsTransport : public HttpTransport {
public:
    HttpResponse post(const std::string& host, const std::string& path, const Headers& headers,
                      const std::string& body, double timeout_seconds) override {
        httplib::SSLClient client(host);
        const auto timeout = std::chrono::milliseconds(long(timeout_seconds * 1000));
        client.set_connection_timeout(timeout);
        client.set_read_timeout(timeout);
        client.set_write_timeout(timeout);
        httplib::Headers h;
        for (const auto& [k, v] : headers) h.emplace(k, v);
        auto res = client.Post(path, h, body, "application/json");
        if (!res) return {0, httplib::to_string(res.error())};
        return {res->status, res->body};
    }
};

std::string utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string require_env(const char* variable) {
    const char* value = std::getenv(variable);
    if (!value || !*value)
        throw AuthError(std::string("environment variable ") + variable + " is not set");
    return value;
}

// process-wide limiter shared by all gateways of a provider
struct RateLimiter {
    std::mutex mutex;
    std::map<Provider, std::deque<std::chrono::steady_clock::time_point>> history;
};

RateLimiter& rate_limiter() {
    static RateLimiter limiter;
    return limiter;
}

} // namespace

std::shared_ptr<HttpTransport> tls_transport() { return std::make_shared<TlsTransport>(); }

Gateway::Gateway(ProviderConfig config) : config_(std::move(config)) {
    if (config_.provider != Provider::replay) transport_ = tls_transport();
}

Gateway::Gateway(ProviderConfig config, std::shared_ptr<HttpTransport> transport)
    : config_(std::move(config)), transport_(std::move(transport)) {}

Gateway::Gateway(ProviderConfig config, Completer completer)
    : config_(std::move(config)), completer_(std::move(completer)) {}

void Gateway::rate_limit_wait() {
    if (config_.requests_per_minute <= 0) return;
    using namespace std::chrono;
    auto& limiter = rate_limiter();
    for (;;) {
        steady_clock::time_point wait_until;
        {
            std::lock_guard lock(limiter.mutex);
            auto& h = limiter.history[config_.provider];
            const auto now = steady_clock::now();
            while (!h.empty() && now - h.front() > minutes(1)) h.pop_front();
            if (int(h.size()) < config_.requests_per_minute) {
                h.push_back(now);
                return;
            }
            wait_until = h.front() + minutes(1);
        }
        std::this_thread::sleep_until(wait_until);
    }
}

std::string Gateway::record_and_return(const MessageScript& script, const std::string& digest_hex,
                                       int sequence, std::string response) {
    if (config_.record) {
        Transcript t;
        t.digest = digest_hex;
        t.provider = to_string(config_.provider);
        t.model = config_.model;
        t.messages = script;
        t.response = response;
        t.recorded_at =
            config_.recorded_at_override.empty() ? utc_now() : config_.recorded_at_override;
        store_transcript(t, config_.transcript_dir, sequence, config_.overwrite);
    }
    return response;
}

std::string Gateway::complete(const MessageScript& script) {
    if (script.messages.empty()) throw SchemaError("message script is empty");
    const std::string d = digest(script, config_.provider, config_.model);

    int sequence = 0;
    {
        std::lock_guard lock(mutex_);
        sequence = ++sequence_[d];
    }

    if (completer_) return record_and_return(script, d, sequence, completer_(script));

    if (config_.provider == Provider::replay) {
        const auto path = transcript_path(config_.transcript_dir, d, sequence);
        if (!std::filesystem::exists(path))
            throw ReplayMissError("no transcript for digest " + d + " (sequence " +
                                  std::to_string(sequence) + ") under " +
                                  config_.transcript_dir.string());
        return load_transcript(path).response;
    }

    rate_limit_wait();
    return record_and_return(script, d, sequence, complete_live(script));
}

namespace {

struct Endpoint {
    std::string host;
    std::string path;
    Headers headers;
    std::string body;
};

Endpoint openai_style(const std::string& host, const std::string& path, const std::string& key,
                      const ProviderConfig& config, const MessageScript& script) {
    json body;
    body["model"] = config.model;
    json msgs = json::array();
    for (const auto& m : script.messages)
        msgs.push_back(json{{"role", m.role}, {"content", m.content}});
    body["messages"] = msgs;
    body["temperature"] = config.temperature;
    body["max_tokens"] = config.max_output_tokens;
    return {host, path, {{"Authorization", "Bearer " + key}}, body.dump()};
}

Endpoint gemini_endpoint(const std::string& key, const ProviderConfig& config,
                         const MessageScript& script) {
    std::string system, user;
    for (const auto& m : script.messages) {
        if (m.role == "system")
            system += m.content;
        else
            user += m.content;
    }
    json body;
    if (!system.empty())
        body["system_instruction"] = json{{"parts", json::array({json{{"text", system}}})}};
    body["contents"] =
        json::array({json{{"role", "user"}, {"parts", json::array({json{{"text", user}}})}}});
    body["generationConfig"] = json{{"temperature", config.temperature},
                                    {"maxOutputTokens", config.max_output_tokens}};
    return {"generativelanguage.googleapis.com",
            "/v1beta/models/" + config.model + ":generateContent?key=" + key,
            {},
            body.dump()};
}

std::string extract_openai_text(const std::string& body) {
    const json doc = json::parse(body);
    return doc.at("choices").at(0).at("message").at("content").get<std::string>();
}

std::string extract_gemini_text(const std::string& body) {
    const json doc = json::parse(body);
    std::string out;
    for (const auto& part : doc.at("candidates").at(0).at("content").at("parts"))
        out += part.at("text").get<std::string>();
    return out;
}

} // namespace

std::string Gateway::complete_live(const MessageScript& script) {
    Endpoint ep;
    switch (config_.provider) {
    case Provider::openai:
        ep = openai_style("api.openai.com", "/v1/chat/completions", require_env("OPENAI_API_KEY"),
                          config_, script);
        break;
    case Provider::groq:
        ep = openai_style("api.groq.com", "/openai/v1/chat/completions",
                          require_env("GROQ_API_KEY"), config_, script);
        break;
    case Provider::gemini:
        ep = gemini_endpoint(require_env("GEMINI_API_KEY"), config_, script);
        break;
    case Provider::replay: throw Error("replay provider cannot go live");
    }

    const int attempts = std::max(1, config_.retry_budget);
    double backoff_seconds = 1.0;
    HttpResponse last;
    for (int attempt = 1; attempt <= attempts; ++attempt) {
        last = transport_->post(ep.host, ep.path, ep.headers, ep.body, config_.timeout_seconds);
        if (last.status == 200) {
            try {
                return config_.provider == Provider::gemini ? extract_gemini_text(last.body)
                                                            : extract_openai_text(last.body);
            } catch (const json::exception& e) {
                throw Error(std::string("malformed provider response: ") + e.what());
            }
        }
        if (last.status == 401 || last.status == 403)
            throw AuthError("provider rejected the API key (HTTP " + std::to_string(last.status) +
                            ")");
        if (last.status != 0 && last.status != 429 && last.status < 500)
            throw Error("provider error HTTP " + std::to_string(last.status) + ": " + last.body);
        if (attempt < attempts) {
            std::this_thread::sleep_for(std::chrono::duration<double>(backoff_seconds));
            backoff_seconds *= 2.0;
        }
    }
    if (last.status == 429) throw RateLimitError("rate limited after retries: " + last.body);
    throw TimeoutError("no response after " + std::to_string(attempts) +
                       " attempts: " + last.body);
}

} // namespace sawp::llm
