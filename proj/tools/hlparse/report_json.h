#ifndef HLPARSE_TOOLS_REPORT_JSON_H_
#define HLPARSE_TOOLS_REPORT_JSON_H_

#include "hlparse/align.h"
#include "hlparse/eval.h"
#include "hlparse/openie.h"
#include "hlparse/project.h"
#include "hlparse/stats.h"
#include "json.hpp"

namespace hlparse::cli {

// Every top-level report carries "schema_version".
nlohmann::json ToJson(const Alignment& a);
nlohmann::json ToJson(const EvalReport& r);
nlohmann::json ToJson(const std::map<std::string, ErrorReduction>& rer);
nlohmann::json ToJson(const SilverReport& r);
nlohmann::json ToJson(const ExtractionTuple& t);
nlohmann::json ToJson(const ExtractionDiff& d);
nlohmann::json ToJson(const RelationDistribution& d);
nlohmann::json ToJson(const CorpusSummary& s);
nlohmann::json ToJson(const DistributionTable& t);

}  // namespace hlparse::cli

#endif  // HLPARSE_TOOLS_REPORT_JSON_H_
