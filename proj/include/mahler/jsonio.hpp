#ifndef MAHLER_JSONIO_HPP
#define MAHLER_JSONIO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "mahler/intrel.hpp"
#include "mahler/permissible.hpp"
#include "mahler/search.hpp"

namespace mahler {

using Json = nlohmann::ordered_json;

// Every JSONL record is {"type": ..., "version": 1, "payload": ...}.
Json wrap_record(const std::string& type, Json payload);
std::string dump_line(const Json& record);

Json report_payload(const PermissibilityReport& r);
Json relation_payload(const RelationResult& r, const std::vector<Int>& conductors,
                      unsigned digits, const std::string& measure);
Json candidate_payload(const CandidateRecord& r);
std::optional<CandidateRecord> candidate_from_payload(const Json& payload);

}  // namespace mahler

#endif  // MAHLER_JSONIO_HPP
