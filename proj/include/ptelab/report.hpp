#pragma once

// Uniform result record for verification routines. Every "verify" entry
// point returns a list of these; the CLI renders them as text lines or
// JSONL, and the JSON form round-trips losslessly.

#include <string>
#include <vector>

namespace ptelab {

struct CheckRecord {
    std::string name;     // stable machine-usable identifier of the check
    std::string params;   // human-readable parameter summary
    bool pass = false;
    std::string detail;   // witness or explanation, empty when uninteresting

    bool operator==(const CheckRecord& o) const {
        return name == o.name && params == o.params && pass == o.pass && detail == o.detail;
    }
};

struct CheckReport {
    std::vector<CheckRecord> records;

    bool all_pass() const;
    void add(std::string name, std::string params, bool pass, std::string detail = "");
    void merge(const CheckReport& o);
};

// "ok name (params)" or "FAIL name (params): detail", one line per record.
std::string to_text(const CheckReport& r);
// One JSON object per line: {"name":..., "params":..., "pass":..., "detail":...}.
std::string to_jsonl(const CheckReport& r);
// Inverse of to_jsonl; throws std::invalid_argument on malformed input.
CheckReport from_jsonl(const std::string& text);

}  // namespace ptelab
