#include "ramsey/trace.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace ramsey {

TraceRec& TraceRec::add(const std::string& key, const std::string& value) {
    kv.emplace_back(key, value);
    return *this;
}

TraceRec& TraceRec::add(const std::string& key, long long value) {
    return add(key, std::to_string(value));
}

std::optional<std::string> TraceRec::get(const std::string& key) const {
    for (const auto& [k, v] : kv)
        if (k == key) return v;
    return std::nullopt;
}

long long TraceRec::geti(const std::string& key) const {
    auto v = get(key);
    if (!v) throw std::invalid_argument("trace: missing field " + key);
    long long out = 0;
    auto [p, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
    if (ec != std::errc{} || p != v->data() + v->size())
        throw std::invalid_argument("trace: field " + key + " is not an integer");
    return out;
}

void TraceRec::set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : kv)
        if (k == key) { v = value; return; }
    kv.emplace_back(key, value);
}

std::string TraceRec::render() const {
    std::string out = kind;
    for (const auto& [k, v] : kv) {
        out += ' ';
        out += k;
        out += '=';
        out += v;
    }
    return out;
}

TraceRec& Trace::push(const std::string& kind) {
    recs.emplace_back(kind);
    return recs.back();
}

std::string Trace::serialize() const {
    std::string out = "trace v" + std::to_string(version) + "\n";
    for (const auto& r : recs) {
        out += r.render();
        out += '\n';
    }
    return out;
}

Trace Trace::parse(std::istream& in) {
    Trace t;
    std::string line;
    if (!std::getline(in, line) || line.rfind("trace v", 0) != 0)
        throw std::invalid_argument("trace: missing 'trace v<N>' header");
    t.version = std::stoi(line.substr(7));
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        TraceRec rec(tok);
        while (ls >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("trace: malformed field '" + tok + "'");
            rec.kv.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
        }
        t.recs.push_back(std::move(rec));
    }
    return t;
}

Trace Trace::parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

const TraceRec* Trace::find(const std::string& kind) const {
    for (const auto& r : recs)
        if (r.kind == kind) return &r;
    return nullptr;
}

std::string join_ints(const std::vector<int>& xs, char sep) {
    if (xs.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

std::vector<int> split_ints(const std::string& s, char sep) {
    std::vector<int> out;
    if (s.empty() || s == "-") return out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find(sep, pos);
        std::string item = s.substr(pos, next == std::string::npos ? next : next - pos);
        int v = 0;
        auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || p != item.data() + item.size())
            throw std::invalid_argument("trace: bad integer list item '" + item + "'");
        out.push_back(v);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

} // namespace ramsey
