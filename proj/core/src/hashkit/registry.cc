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

#include <array>
#include <string>

#include "lwhb/error.h"
#include "lwhb/hashkit/spec.h"

namespace lwhb::hashkit {

namespace {

using S = Structure;
constexpr std::optional<std::uint32_t> kNoInputRate = std::nullopt;

// clang-format off
constexpr std::array<HashSpec, 24> kRegistry = {{
  // id               name              rate  in-rate       cap  cap?   state  structure            primitive                                rounds        var    rounds_note                                                  digest impl   note
  {"photon-256",     "PHOTON-256",      32,  kNoInputRate, 256, true,  288,  S::kExtendedSponge,  "AES-like permutation",                  12,           false, "",                                                           256,   false, ""},
  {"lesamnta-lw",    "Lesamnta-LW",     128, kNoInputRate, 0,   false, 256,  S::kMerkleDamgard,   "AES-based block cipher (LW1 mode)",     64,           false, "",                                                           256,   false, ""},
  {"blake2s",        "BLAKE2s",         512, kNoInputRate, 0,   false, 256,  S::kHaifa,           "ChaCha-inspired G function",            10,           false, "",                                                           256,   true,  ""},
  {"blake3",         "BLAKE3",          512, kNoInputRate, 0,   false, 256,  S::kBinaryTree,      "BLAKE2s compression function",          7,            false, "",                                                           256,   false, ""},
  {"ascon",          "ASCON",           64,  kNoInputRate, 256, true,  320,  S::kSponge,          "Bit-sliced permutation",                12,           false, "12/8: p^a = 12; p^b = 8 only in Ascon-Hasha. Ascon-Hash uses 12 throughout", 256, true, ""},
  {"photon-beetle",  "PHOTON-Beetle",   32,  kNoInputRate, 224, true,  256,  S::kSponge,          "PHOTON-256 permutation",                12,           false, "",                                                           256,   true,  ""},
  {"xoodyak",        "Xoodyak",         128, kNoInputRate, 256, true,  384,  S::kDuplex,          "3x32-bit slices, XOR/rotate/shift",     12,           false, "",                                                           256,   true,  "source table prints state 320; Xoodoo is 384 bits"},
  {"knot",           "KNOT",            32,  kNoInputRate, 224, true,  256,  S::kSponge,          "SPN-style substitution and diffusion",  68,           false, "",                                                           256,   false, "sponge/duplex"},
  {"orangish",       "ORANGISH",        128, kNoInputRate, 128, true,  256,  S::kSponge,          "PHOTON256 permutation",                 12,           false, "",                                                           256,   false, "sponge (JH mode)"},
  {"shamas",         "SHAMAS",          64,  kNoInputRate, 256, true,  320,  S::kSponge,          "Bit-sliced permutation, linear matrix mixing, byte-wise rotations", 12, false, "",                                      256,   false, "sponge/duplex"},
  {"siv-rijndael",   "SIV-Rijndael",    32,  kNoInputRate, 224, true,  256,  S::kModifiedSponge,  "Rijndael256 permutation",               14,           false, "",                                                           256,   false, ""},
  {"siv-tem-photon", "SIV-TEM-PHOTON",  32,  kNoInputRate, 224, true,  256,  S::kModifiedSponge,  "PHOTON-256 permutation",                20,           false, "",                                                           256,   false, ""},
  {"skinny-tk2",     "SKINNY-tk2",      32,  kNoInputRate, 224, true,  256,  S::kSponge,          "SKINNY-128-256 TK Cipher",              48,           false, "",                                                           256,   false, ""},
  {"sneikha",        "SNEIKHA",         256, kNoInputRate, 256, true,  512,  S::kSponge,          "SNEIK f512 ARX Permutation",            8,            false, "",                                                           256,   false, "sponge (BLNK2)"},
  {"triad",          "TRIAD",           32,  kNoInputRate, 224, true,  256,  S::kExtendedSponge,  "Triad-P permutation",                   1024,         false, "",                                                           256,   false, ""},
  {"coral",          "Coral",           32,  kNoInputRate, 224, true,  256,  S::kSponge,          "piI permutation",                       10,           false, "",                                                           256,   false, ""},
  {"gimli",          "Gimli",           128, kNoInputRate, 256, true,  384,  S::kSponge,          "Gimli permutation",                     24,           false, "",                                                           256,   true,  ""},
  {"clx",            "CLX",             32,  kNoInputRate, 256, true,  288,  S::kSponge,          "P'_{288,n} NLFSR permutation",          std::nullopt, true,  "round count depends on the step parameter n",               256,   false, ""},
  {"ace-h",          "ACE-H",           64,  kNoInputRate, 256, true,  320,  S::kSponge,          "ACE Permutation (Simeck-style)",        48,           false, "",                                                           256,   false, "sponge (sLiSCP-light)"},
  {"esch256",        "ESCH",            128, kNoInputRate, 256, true,  384,  S::kModifiedSponge,  "ARX-based Sparkle384",                  7,            true,  "7 steps per message block, 11 for the last block",          256,   true,  ""},
  {"subterranean",   "Subterranean",    32,  9,            224, true,  257,  S::kFlatSponge,      "Bitwise round function",                1,            false, "",                                                           256,   false, "rate is 32 bits out, 9 bits in"},
  {"saturnin",       "Saturnin",        256, kNoInputRate, 0,   false, 256,  S::kMerkleDamgard,   "Saturnin Block Cipher",                 32,           false, "",                                                           256,   false, ""},
  {"isap",           "ISAP",            144, kNoInputRate, 256, true,  400,  S::kSponge,          "Keccak-p[400] and Ascon-p",             12,           true,  "Ascon-p 12 rounds (ISAP-A); Keccak-p[400] 20 rounds (ISAP-K)", 256, false, "source table prints state 320 / 400"},
  {"gage",           "GAGE",            8,   kNoInputRate, 224, true,  232,  S::kSponge,          "Custom SPN permutation",                32,           false, "",                                                           256,   false, ""},
}};
// clang-format on

}  // namespace

std::string_view StructureName(Structure s) {
  switch (s) {
    case Structure::kSponge:
      return "Sponge";
    case Structure::kExtendedSponge:
      return "Extended Sponge";
    case Structure::kDuplex:
      return "Duplex";
    case Structure::kModifiedSponge:
      return "Modified Sponge";
    case Structure::kMerkleDamgard:
      return "Merkle-Damgard";
    case Structure::kHaifa:
      return "HAIFA";
    case Structure::kBinaryTree:
      return "Binary Tree";
    case Structure::kFlatSponge:
      return "Flat Sponge";
  }
  return "?";
}

std::span<const HashSpec> RegistryList() { return kRegistry; }

const HashSpec* FindSpec(std::string_view id) {
  for (const HashSpec& spec : kRegistry) {
    if (spec.id == id) return &spec;
  }
  return nullptr;
}

const HashSpec& RequireImplemented(std::string_view id) {
  const HashSpec* spec = FindSpec(id);
  if (spec == nullptr) {
    ThrowNotImplemented("unknown hash function '" + std::string(id) + "'");
  }
  if (!spec->implemented) {
    ThrowNotImplemented("'" + std::string(id) +
                        "' is registry-only (no implementation)");
  }
  return *spec;
}

}  // namespace lwhb::hashkit
