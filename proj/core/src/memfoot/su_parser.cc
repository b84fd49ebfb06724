// Copyright 2026 The lwhbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>

#include "lwhb/error.h"
#include "lwhb/memfoot/memfoot.h"
#include "memfoot/text_util.h"

namespace lwhb::memfoot {

namespace {

using internal::ParseSize;
using internal::SplitLines;
using internal::Tokens;
using internal::Trim;

bool IsDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

// Splits "path:line:col:function" at the first ":<line>:<col>:" run, so
// drive letters in the path and "::" in C++ names both survive.
bool SplitLocation(std::string_view field, std::string& location,
                   std::string& function) {
  for (std::size_t p = field.find(':'); p != std::string_view::npos;
       p = field.find(':', p + 1)) {
    const std::size_t q = field.find(':', p + 1);
    if (q == std::string_view::npos) return false;
    const std::size_t r = field.find(':', q + 1);
    if (r == std::string_view::npos) return false;
    if (IsDigits(field.substr(p + 1, q - p - 1)) &&
        IsDigits(field.substr(q + 1, r - q - 1))) {
      location = std::string(field.substr(0, r));
      function = std::string(field.substr(r + 1));
      return !function.empty();
    }
  }
  return false;
}

std::vector<StackEntry> ParseEntries(std::string_view su_text) {
  std::vector<StackEntry> entries;
  const std::vector<std::string_view> lines = SplitLines(su_text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::string_view line = Trim(lines[i]);
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (std::size_t tab; (tab = rest.find('\t')) != std::string_view::npos;) {
      fields.push_back(Trim(rest.substr(0, tab)));
      rest.remove_prefix(tab + 1);
    }
    fields.push_back(Trim(rest));
    if (fields.size() != 3) {
      ThrowParseError("expected 3 tab-separated fields", line_no);
    }
    StackEntry e;
    if (!SplitLocation(fields[0], e.location, e.function)) {
      ThrowParseError("expected file:line:col:function", line_no);
    }
    if (!IsDigits(fields[1])) {
      ThrowParseError("malformed stack size '" + std::string(fields[1]) + "'",
                      line_no);
    }
    e.bytes = *ParseSize(fields[1]);
    const std::string_view q = fields[2];
    if (q == "static") {
      e.qualifier = StackQualifier::kStatic;
    } else if (q == "dynamic") {
      e.qualifier = StackQualifier::kDynamic;
    } else if (q == "dynamic,bounded") {
      e.qualifier = StackQualifier::kBounded;
    } else {
      ThrowParseError("unknown stack qualifier '" + std::string(q) + "'",
                      line_no);
    }
    entries.push_back(std::move(e));
  }
  if (entries.empty()) ThrowParseError("empty stack-usage file");
  return entries;
}

class PathDepth {
 public:
  PathDepth(const std::map<std::string, std::uint64_t>& frames,
            const std::map<std::string, std::vector<std::string>>& callees)
      : frames_(frames), callees_(callees) {}

  std::uint64_t Of(const std::string& fn) {
    if (auto it = done_.find(fn); it != done_.end()) return it->second;
    if (!active_.insert(fn).second) {
      ThrowInvalidArgument("call graph is recursive through '" + fn + "'");
    }
    std::uint64_t deepest_callee = 0;
    if (auto it = callees_.find(fn); it != callees_.end()) {
      for (const std::string& callee : it->second) {
        deepest_callee = std::max(deepest_callee, Of(callee));
      }
    }
    active_.erase(fn);
    const auto frame = frames_.find(fn);
    const std::uint64_t depth =
        (frame == frames_.end() ? 0 : frame->second) + deepest_callee;
    done_.emplace(fn, depth);
    return depth;
  }

 private:
  const std::map<std::string, std::uint64_t>& frames_;
  const std::map<std::string, std::vector<std::string>>& callees_;
  std::map<std::string, std::uint64_t> done_;
  std::set<std::string> active_;
};

}  // namespace

std::string_view StackQualifierName(StackQualifier q) {
  switch (q) {
    case StackQualifier::kStatic:
      return "static";
    case StackQualifier::kDynamic:
      return "dynamic";
    case StackQualifier::kBounded:
      return "bounded";
  }
  return "?";
}

std::string_view StackPolicyName(StackPolicy p) {
  switch (p) {
    case StackPolicy::kMaxFrame:
      return "max-frame";
    case StackPolicy::kDeepestPath:
      return "deepest-path";
  }
  return "?";
}

CallGraph ParseCallGraph(std::string_view text) {
  CallGraph graph;
  const std::vector<std::string_view> lines = SplitLines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = Trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const std::vector<std::string_view> toks = Tokens(line);
    if (toks.size() != 2) {
      ThrowParseError("expected 'caller callee'", i + 1);
    }
    graph.emplace_back(std::string(toks[0]), std::string(toks[1]));
  }
  return graph;
}

StackUsage ParseSu(std::string_view su_text) {
  StackUsage usage;
  usage.entries = ParseEntries(su_text);
  usage.policy = StackPolicy::kMaxFrame;
  for (const StackEntry& e : usage.entries) {
    usage.worst_case_bytes = std::max(usage.worst_case_bytes, e.bytes);
  }
  return usage;
}

StackUsage ParseSu(std::string_view su_text, const CallGraph& graph) {
  StackUsage usage;
  usage.entries = ParseEntries(su_text);
  usage.policy = StackPolicy::kDeepestPath;

  std::map<std::string, std::uint64_t> frames;
  for (const StackEntry& e : usage.entries) {
    std::uint64_t& f = frames[e.function];
    f = std::max(f, e.bytes);
  }
  std::map<std::string, std::vector<std::string>> callees;
  for (const auto& [caller, callee] : graph) callees[caller].push_back(callee);

  PathDepth depth(frames, callees);
  for (const auto& [fn, bytes] : frames) {
    usage.worst_case_bytes = std::max(usage.worst_case_bytes, depth.Of(fn));
  }
  for (const auto& [caller, unused] : callees) {
    usage.worst_case_bytes = std::max(usage.worst_case_bytes, depth.Of(caller));
  }
  return usage;
}

}  // namespace lwhb::memfoot
