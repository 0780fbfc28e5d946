#include "sect/mi/remote.hpp"

#include <regex>

#include <httplib.h>
#include <json.hpp>

namespace sect::mi {

namespace {

httplib::Client connect(const std::string& origin, std::chrono::seconds timeout) {
    httplib::Client cli(origin);
    cli.set_connection_timeout(timeout);
    cli.set_read_timeout(timeout);
    cli.set_write_timeout(timeout);
    return cli;
}

std::string describe(const httplib::Result& res) {
    if (!res) return "request failed: " + httplib::to_string(res.error());
    return "HTTP " + std::to_string(res->status) + ": " + res->body.substr(0, 200);
}

}  // namespace

RemoteProvider::RemoteProvider(std::string endpoint, std::chrono::seconds timeout) : timeout_(timeout) {
    static const std::regex url(R"(^(http://[^/\s]+)(/[^\s]*)?$)");
    std::smatch m;
    if (!std::regex_match(endpoint, m, url)) throw InvalidInput("endpoint must look like http://host:port, got '" + endpoint + "'");
    origin_ = m[1];
    base_ = m[2];
    while (!base_.empty() && base_.back() == '/') base_.pop_back();
}

std::string RemoteProvider::name() const { return "remote(" + origin_ + base_ + ")"; }

LikelihoodProfile RemoteProvider::profile(std::string sample_id, std::string_view text) const {
    if (text.empty()) throw InvalidInput("sample '" + sample_id + "' is empty");
    auto cli = connect(origin_, timeout_);
    nlohmann::json req = {{"text", std::string(text)}};
    auto res = cli.Post(base_ + "/v1/nll", req.dump(), "application/json");
    if (!res || res->status != 200) throw ProviderError("sample '" + sample_id + "': " + describe(res));
    LikelihoodProfile p;
    p.sample_id = std::move(sample_id);
    try {
        auto j = nlohmann::json::parse(res->body);
        p.tokens = j.at("tokens").get<std::vector<std::string>>();
        p.nll = j.at("nll").get<std::vector<double>>();
        j.at("model_id").get<std::string>();
        if (j.value("truncated", false)) ++truncated_;
    } catch (const nlohmann::json::exception& e) {
        throw ProviderError("sample '" + p.sample_id + "': malformed reply: " + e.what());
    }
    try {
        validate(p);
    } catch (const InvalidInput& e) {
        throw ProviderError(e.what());
    }
    return p;
}

std::string RemoteProvider::health() const {
    auto cli = connect(origin_, timeout_);
    auto res = cli.Get(base_ + "/healthz");
    if (!res || res->status != 200) throw ProviderError("healthz: " + describe(res));
    try {
        return nlohmann::json::parse(res->body).at("model_id").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ProviderError(std::string("healthz: malformed reply: ") + e.what());
    }
}

}  // namespace sect::mi
