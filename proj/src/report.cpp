#include "ptelab/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ptelab {

bool CheckReport::all_pass() const {
    return std::all_of(records.begin(), records.end(),
                       [](const CheckRecord& r) { return r.pass; });
}

void CheckReport::add(std::string name, std::string params, bool pass, std::string detail) {
    records.push_back(CheckRecord{std::move(name), std::move(params), pass, std::move(detail)});
}

void CheckReport::merge(const CheckReport& o) {
    records.insert(records.end(), o.records.begin(), o.records.end());
}

std::string to_text(const CheckReport& r) {
    std::ostringstream os;
    for (const auto& rec : r.records) {
        os << (rec.pass ? "ok " : "FAIL ") << rec.name;
        if (!rec.params.empty()) os << " (" << rec.params << ')';
        if (!rec.pass && !rec.detail.empty()) os << ": " << rec.detail;
        if (rec.pass && !rec.detail.empty()) os << " [" << rec.detail << ']';
        os << '\n';
    }
    return os.str();
}

std::string to_jsonl(const CheckReport& r) {
    std::ostringstream os;
    for (const auto& rec : r.records) {
        nlohmann::json j;
        j["name"] = rec.name;
        j["params"] = rec.params;
        j["pass"] = rec.pass;
        j["detail"] = rec.detail;
        os << j.dump() << '\n';
    }
    return os.str();
}

CheckReport from_jsonl(const std::string& text) {
    CheckReport r;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw std::invalid_argument("from_jsonl: malformed record line");
        try {
            CheckRecord rec;
            rec.name = j.at("name").get<std::string>();
            rec.params = j.at("params").get<std::string>();
            rec.pass = j.at("pass").get<bool>();
            rec.detail = j.at("detail").get<std::string>();
            r.records.push_back(std::move(rec));
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("from_jsonl: bad record: ") + e.what());
        }
    }
    return r;
}

}  // namespace ptelab
