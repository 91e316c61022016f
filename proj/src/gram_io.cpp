#include "schottky/gram_io.hpp"

#include "schottky/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace schottky {

namespace {

ValidationError parse_error(const std::string& why) { return ValidationError(ValidationKind::ParseError, why); }

GramInput parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(e.what());
    }
    if (!j.is_object()) throw parse_error("expected a JSON object");
    GramInput in;
    try {
        in.dim = j.at("dim").get<int>();
        const auto& e = j.at("entries");
        if (!e.is_array()) throw parse_error("entries must be an array");
        for (const auto& v : e) {
            if (!v.is_number()) throw parse_error("entries must be numbers");
            in.entries.push_back(v.get<double>());
        }
        const std::string mode = j.value("mode", std::string("ppav"));
        if (mode == "ppav") {
            in.mode = GramMode::PPAV;
        } else if (mode == "plain") {
            in.mode = GramMode::Plain;
        } else {
            throw parse_error("mode must be \"ppav\" or \"plain\"");
        }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(e.what());
    }
    if (in.dim <= 0) throw parse_error("dim must be positive");
    return in;
}

GramInput parse_text(const std::string& text) {
    std::istringstream is(text);
    GramInput in;
    long long d = 0;
    if (!(is >> d) || d <= 0 || d > 4096) throw parse_error("expected a positive dimension");
    in.dim = static_cast<int>(d);
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            if (used != tok.size()) throw parse_error("bad number: " + tok);
            in.entries.push_back(v);
        } catch (const std::logic_error&) {
            // stod reports inf/nan spellings and overflow here as well
            throw parse_error("bad number: " + tok);
        }
    }
    return in;
}

} // namespace

GramInput parse_gram(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw parse_error("empty input");
    return text[first] == '{' ? parse_json(text) : parse_text(text);
}

GramInput read_gram_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_gram(ss.str());
}

GramMatrix load_gram(const std::string& path) {
    const GramInput in = read_gram_file(path);
    return validate(in.entries, in.dim, in.mode);
}

std::string to_json(const GramMatrix& gram) {
    std::string out = "{\"dim\": " + std::to_string(gram.dim()) + ", \"entries\": [";
    char buf[32];
    for (std::size_t i = 0; i < gram.entries().size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", gram.entries()[i]);
        if (i) out += ", ";
        out += buf;
    }
    out += "], \"mode\": \"";
    out += gram.mode() == GramMode::PPAV ? "ppav" : "plain";
    out += "\"}";
    return out;
}

} // namespace schottky
