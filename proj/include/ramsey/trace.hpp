#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

// One line of a run trace: a record kind followed by key=value fields in a
// fixed order. Values never contain spaces; lists are comma separated and
// edge index sets use dots ("1.3.4"). An empty list renders as "-".
struct TraceRec {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> kv;

    TraceRec() = default;
    explicit TraceRec(std::string k) : kind(std::move(k)) {}

    TraceRec& add(const std::string& key, const std::string& value);
    TraceRec& add(const std::string& key, long long value);
    std::optional<std::string> get(const std::string& key) const;
    // field must exist and parse as a signed integer
    long long geti(const std::string& key) const;
    bool has(const std::string& key) const { return get(key).has_value(); }
    void set(const std::string& key, const std::string& value);

    std::string render() const;
};

// Serialized run of one extraction. The format is line oriented and closed
// under parse/serialize round trips, field order included, so a validator can
// re-emit what it read and a test can flip one field and leave the rest
// byte-identical.
struct Trace {
    int version = 1;
    std::vector<TraceRec> recs;

    TraceRec& push(const std::string& kind);
    std::string serialize() const;
    static Trace parse(std::istream& in);
    static Trace parse_string(const std::string& text);

    // first record of the given kind, if any
    const TraceRec* find(const std::string& kind) const;
};

// "1,2,3" with sep=','; empty list renders as "-"
std::string join_ints(const std::vector<int>& xs, char sep = ',');
std::vector<int> split_ints(const std::string& s, char sep = ',');

} // namespace ramsey
