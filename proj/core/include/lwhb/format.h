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

#ifndef LWHB_FORMAT_H_
#define LWHB_FORMAT_H_

#include <string>

namespace lwhb {

// Fixed, locale-independent rendering with 6 significant digits ("%.6g").
// All report and CLI output goes through this so golden files are stable.
std::string FormatNumber(double value);

// Escapes a string for inclusion in XML/SVG text and attributes.
std::string XmlEscape(const std::string& text);

}  // namespace lwhb

#endif  // LWHB_FORMAT_H_
