// Copyright 2026 The hadsw Authors
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

#include "hadsw/corpus.h"

#include <cctype>
#include <stdexcept>

namespace hadsw {
namespace {

struct RawEntry {
  const char* name;
  std::vector<std::string> rows;
};

std::vector<RawEntry> raw_entries() {
  return {
      {"H1",
       {
           "++",
           "+-",
       }},
      {"H2",
       {
           "--",
           "+-",
       }},
      {"H4",
       {
           "++++",
           "++--",
           "+-+-",
           "+--+",
       }},
      {"H8",
       {
           "++++++++",
           "++--++--",
           "+-+-+-+-",
           "+--++--+",
           "++++----",
           "++----++",
           "+-+--+-+",
           "+--+-++-",
       }},
      {"H12",
       {
           "+---++++++--",
           "-+--++------",
           "--+-++--++++",
           "---+++++--++",
           "++++++-++--+",
           "+++++++--++-",
           "-++--++++-+-",
           "-++-+-++-+-+",
           "-+-++--++++-",
           "-+-+-++-++-+",
           "++---+-+-+++",
           "++--+-+-+-++",
       }},
      {"H12'",
       {
           "+-----++++--",
           "-+----------",
           "--+-----++++",
           "---+--++--++",
           "----++-++--+",
           "----+++--++-",
           "-++--++++-+-",
           "-++-+-++-+-+",
           "-+-++--++++-",
           "-+-+-++-++-+",
           "++---+-+-+++",
           "++--+-+-+-++",
       }},
      {"H16.0",
       {
           "++++++++++++++++",
           "+-+-+-+-+-+-+-+-",
           "++--++--++--++--",
           "+--++--++--++--+",
           "++++----++++----",
           "+-+--+-++-+--+-+",
           "++----++++----++",
           "+--+-++-+--+-++-",
           "++++++++--------",
           "+-+-+-+--+-+-+-+",
           "++--++----++--++",
           "+--++--+-++--++-",
           "++++--------++++",
           "+-+--+-+-+-++-+-",
           "++----++--++++--",
           "+--+-++--++-+--+",
       }},
      {"H16.1",
       {
           "++++++++++++++++",
           "+-+-+-+-+-+-+-+-",
           "++--++--++--++--",
           "+--++--++--++--+",
           "++++----++++----",
           "+-+--+-++-+--+-+",
           "++----++++----++",
           "+--+-++-+--+-++-",
           "++++++++--------",
           "+-+-+--+-+-+-++-",
           "++--++----++--++",
           "+--++-+--++--+-+",
           "++++--------++++",
           "+-+--++--+-++--+",
           "++----++--++++--",
           "+--+-+-+-++-+-+-",
       }},
      {"H16.2",
       {
           "++++++++++++++++",
           "+-+-+-+-+-+-+-+-",
           "++--++--++--++--",
           "+--++--++--++--+",
           "++++----++++----",
           "+-+--+-++-+--+-+",
           "++----++++----++",
           "+--+-++-+--+-++-",
           "++++++++--------",
           "++++--------++++",
           "++--+-+---++-+-+",
           "++---+-+--+++-+-",
           "+-+-+--+-+-+-++-",
           "+-+--++--+-++--+",
           "+--+++---++---++",
           "+--+--++-++-++--",
       }},
      {"H16.3",
       {
           "++++++++++++++++",
           "+-+-+-+-+-+-+-+-",
           "++--++--++--++--",
           "+--++--++--++--+",
           "++++----++++----",
           "+-+--+-++-+--+-+",
           "++----++++----++",
           "+--+-++-+--+-++-",
           "++++++++--------",
           "+++-+------+-+++",
           "++-+---+--+-+++-",
           "++---++---+++--+",
           "+-++-+---+--+-++",
           "+-+---++-+-+++--",
           "+--++-+--++--+-+",
           "+---++-+-+++--+-",
       }},
      {"H16.4",
       {
           "++++++++++++++++",
           "+-+-+-+-++++----",
           "++--++--++--++--",
           "+--++--++-+-+-+-",
           "++++----++----++",
           "+-+--+-++--++--+",
           "++----+++--+-++-",
           "+--+-++-+-+--+-+",
           "++++++++--------",
           "+-+-+-+-----++++",
           "++--++----++--++",
           "+--++--+-+-+-+-+",
           "++++------++++--",
           "+-+--+-+-++--++-",
           "++----++-++-+--+",
           "+--+-++--+-++-+-",
       }},
      {"H20.0",
       {
           "+-------------------",
           "++-++----+-+-++++--+",
           "+++-++----+-+-++++--",
           "+-++-++----+-+-++++-",
           "+--++-++----+-+-++++",
           "++--++-++----+-+-+++",
           "+++--++-++----+-+-++",
           "++++--++-++----+-+-+",
           "+++++--++-++----+-+-",
           "+-++++--++-++----+-+",
           "++-++++--++-++----+-",
           "+-+-++++--++-++----+",
           "++-+-++++--++-++----",
           "+-+-+-++++--++-++---",
           "+--+-+-++++--++-++--",
           "+---+-+-++++--++-++-",
           "+----+-+-++++--++-++",
           "++----+-+-++++--++-+",
           "+++----+-+-++++--++-",
           "+-++----+-+-++++--++",
       }},
      {"H20.1",
       {
           "+----+----++--++-++-",
           "-+----+---+++---+-++",
           "--+----+---+++-+-+-+",
           "---+----+---+++++-+-",
           "----+----++--++-++-+",
           "-+++++-----+--+++--+",
           "+-+++-+---+-+--+++--",
           "++-++--+---+-+--+++-",
           "+++-+---+---+-+--+++",
           "++++-----++--+-+--++",
           "--++-+-++-+-----++++",
           "---++-+-++-+---+-+++",
           "+---++-+-+--+--++-++",
           "++---++-+----+-+++-+",
           "-++---++-+----+++++-",
           "-+--+--++-+----+----",
           "+-+-----++-+----+---",
           "-+-+-+---+--+----+--",
           "--+-+++------+----+-",
           "+--+--++------+----+",
       }},
      {"H20.2",
       {
           "++++++++++++++++++++",
           "++++++++++----------",
           "+++++-----+++++-----",
           "++++-+----+----++++-",
           "+++---++---++--++--+",
           "++-+--++-----++--+++",
           "++--++--+--+-+-+-+-+",
           "++--++---+--+-+-+-++",
           "++----+-++++--+-++--",
           "++-----++++-++-+--+-",
           "+-++----++-+--++--++",
           "+-+-+-+-+-+-+----+++",
           "+-+-+--+-+-+-+--+++-",
           "+-+--++--+--++++-+--",
           "+-+--+-++-+--++-+--+",
           "+--++-+--++--+-++--+",
           "+--++--++---+-++++--",
           "+--+-++-+--+++--+-+-",
           "+--+-+-+-++++----+-+",
           "+---++++--++--++--+-",
       }},
      {"H36",
       {
           "+------++++--+++-+-++-++-+-+++--++++",
           "-+------+++++-+++-+-++-++-+-+++--+++",
           "--+---+--+++-+-+++++-++-++-+-+++--++",
           "---+--++--+++-+-++-++-+++++-+-+++--+",
           "----+-+++--+++-+-++-++-+-+++-+++++--",
           "-----+++++--+++-+-++-++-+-+++--++++-",
           "--+++++------++++--+++-+-++-++-+-+++",
           "+--+++-+------+++++-+++-+-++-++-+-++",
           "++--++--+---+--+++-+-+++++-++-++-+-+",
           "+++--+---+--++--+++-+-++-++-+++++-+-",
           "++++------+-+++--+++-+-++-++-+-+++-+",
           "-++++------+++++--+++-+-++-++-+-+++-",
           "-+-+++--+++++------++++--+++-+-++-++",
           "+-+-+++--+++-+------+++++-+++-+-++-+",
           "++-+-+++--++--+---+--+++-+-+++++-++-",
           "+++-+-+++--+---+--++--+++-+-++-++-++",
           "-+++-+++++------+-+++--+++-+-++-++-+",
           "+-+++--++++------+++++--+++-+-++-++-",
           "-++-++-+-+++--+++++------++++--+++-+",
           "+-++-++-+-+++--+++-+------+++++-+++-",
           "++-++-++-+-+++--++--+---+--+++-+-+++",
           "-++-+++++-+-+++--+---+--++--+++-+-++",
           "+-++-+-+++-+++++------+-+++--+++-+-+",
           "++-++-+-+++--++++------+++++--+++-+-",
           "-+++-+-++-++-+-+++--+++++------++++-",
           "+-+++-+-++-++-+-+++--+++-+------++++",
           "-+-+++++-++-++-+-+++--++--+---+--+++",
           "+-+-++-++-+++++-+-+++--+---+--++--++",
           "++-+-++-++-+-+++-+++++------+-+++--+",
           "+++-+-++-++-+-+++--++++------+++++--",
           "-++++--+++-+-++-++-+-+++--+++++-----",
           "--+++++-+++-+-++-++-+-+++--+++-+----",
           "+--+++-+-+++++-++-++-+-+++--++--+---",
           "++--+++-+-++-++-+++++-+-+++--+---+--",
           "+++--+++-+-++-++-+-+++-+++++------+-",
           "++++--+++-+-++-++-+-+++--++++------+",
       }},
      {"H'36",
       {
           "+-------++---+-+---++-++---+-+---++-",
           "-+------+++++-+++-+-++-++-+-+++--+++",
           "--+---+--+++-+-+++++-++-++-+-+++--++",
           "---+--+----++---+--++-+++-+---++----",
           "----+-+++--+++-+-++-++-+-+++-+++++--",
           "-----+++++--+++-+-++-++-+-+++--++++-",
           "--+++++------++++--+++-+-++-++-+-+++",
           "----++-+------++++--+-+-+-++-++-+-++",
           "++--++--+---+--+++-+-+++++-++-++-+-+",
           "+++--+---+--++--+++-+-++-++-+++++-+-",
           "-++-------+-+++--+-+---++-++-+-+++-+",
           "-++++------+++++--+++-+-++-++-+-+++-",
           "-+-+++--+++++------++++--+++-+-++-++",
           "+-+-+++--+++-+------+++++-+++-+-++-+",
           "-+---+++--++--+-------++-+-+++++-++-",
           "+++-+-+++--+---+--++--+++-+-++-++-++",
           "-+++-+++++------+-+++--+++-+-++-++-+",
           "--+-+--++++------+-++---+++-+-++-++-",
           "-++-++---+-+---++-+-------++---+-+--",
           "+-++-++-+-+++--+++-+------+++++-+++-",
           "++-++-++-+-+++--++--+---+--+++-+-+++",
           "-++-+++-+---++-------+--+----++---+-",
           "+-++-+-+++-+++++------+-+++--+++-+-+",
           "++-++-+-+++--++++------+++++--+++-+-",
           "-+++-+-++-++-+-+++--+++++------++++-",
           "--+-+-+-++-++-+-++----++-+------++++",
           "-+-+++++-++-++-+-+++--++--+---+--+++",
           "+-+-++-++-+++++-+-+++--+---+--++--++",
           "-+---++-++-+-+++-+-++-------+-+++--+",
           "+++-+-++-++-+-+++--++++------+++++--",
           "-++++--+++-+-++-++-+-+++--+++++-----",
           "--+++++-+++-+-++-++-+-+++--+++-+----",
           "----++-+-+++++-++--+---+++--++--+---",
           "++--+++-+-++-++-+++++-+-+++--+---+--",
           "+++--+++-+-++-++-+-+++-+++++------+-",
           "-++---+++-+-++-++---+-+--++++------+",
       }},
      {"H36.n",
       {
           "++++++++++++++++++++++++++++++++++++",
           "++-----+---+++--++++-++-++++--+-+---",
           "+-+---+++--+--+-+-+-++-++---+-++++--",
           "+--+--+-++-+++-++-------+-++-+++-++-",
           "+---+-+--++++-+---++-++---+-+-++--++",
           "+----++---+-+--++++-++-++++--+-+---+",
           "+-+++++++++-----++---++---++---++---",
           "+++---++---++-++-+--+-+----+-+-++-++",
           "+-++--+-+--+---+-+++--++-++++----+-+",
           "+--++-+--+-+-+---+--++++++--++--+-+-",
           "+---+++---++-++-++-+---+---+-++-++-+",
           "+++++--++++++----++----++----++----+",
           "++-+++-+---+++++-+---+-+--+-+--+-+--",
           "++-+-----++-++--+-+-+-++---++--+++-+",
           "+-+-+--+--+-+-+-+-----++++++++---++-",
           "+--+-+-++---+--++--+-+++----+++-+-++",
           "++++-++---+--++++++---+-+---+-+---+-",
           "++---++++++++---++-++----+--+----++-",
           "+++-++--+--+-+--+-+++-++--+--+-+--+-",
           "++--+---+-+----+-+++-+--+--+++-++++-",
           "+-+--+-+-+---+---++-++----+++++--+++",
           "+++-+++--+--+--+---++++++--+--+--+--",
           "++--+-++++---++++-+--++--+---+---+-+",
           "+-+--+--++++++++--+--+-+-+-+----+-+-",
           "++++-+---+-+--+-+--+-+--++-+++-+---+",
           "++---+--++----+--+----+++++---++++++",
           "++-++++-+---+-+---+-+----++++++-+---",
           "++-+--+++-+--++----+++-++-++------++",
           "+-+-+---++--++++++-++---+-+-+---+--+",
           "+--+-+-+-+++--++--+++-+-+-+--+--++--",
           "+++++-----++---++---++---++---+-++++",
           "+-++++++----++----++----++-----+++++",
           "+++---++-++--+-+---+---+-++-+++++---",
           "+-++----+-+-+++--+-++++--+---+++-+--",
           "+--++--+-+----+++++++--+-+-+--++--+-",
           "+---++-++-++-+-+----+-+-++-++-++---+",
       }},
      {"H'36.n",
       {
           "++++++++++++++++++++++++++++++++++++",
           "++-----++----+-+++++-++-++-+-+--++--",
           "+-+---+++--+--+-+-+-++-++---+-++++--",
           "+--+--+-++-+++-++-------+-++-+++-++-",
           "+---+-+-+++---++--++-++-----++-+-+++",
           "+----++---+-+--++++-++-++++--+-+---+",
           "+-+++++++++-----++---++---++---++---",
           "+++---++---++-++-+--+-+----+-+-++-++",
           "+++++-+-+--+---+-++----+-++++----+-+",
           "+--++-+--+-+-+---+--++++++--++--+-+-",
           "+---+++---++-++-++-+---+---+-++-++-+",
           "+-++---++++++----+++--+++----++----+",
           "+--+-+-+---+++++-+-+-+++--+-+--+-+--",
           "++-+-----++-++--+-+-+-++---++--+++-+",
           "+-+-+--+--+-+-+-+-----++++++++---++-",
           "++-+++-++---+--++----+-+----+++-+-++",
           "++++-++---+--++++++---+-+---+-+---+-",
           "++---++++++++---++-++----+--+----++-",
           "+++-++--+--+-+--+-+++-++--+--+-+--+-",
           "++--+-----+++----+++-+--+-+++-+++-+-",
           "+-+--+-+-+---+---++-++----+++++--+++",
           "+++-+++--+--+--+---++++++--+--+--+--",
           "++--+-++-+-++++-+-+--++--++---+----+",
           "+-+--+--++++++++--+--+-+-+-+----+-+-",
           "++++-+---+-+--+-+--+-+--++-+++-+---+",
           "++---+--++----+--+----+++++---++++++",
           "+--+-++-+---+-+---+++-+--++++++-+---",
           "++-+--+++-+--++----+++-++-++------++",
           "+-+-+---++--++++++-++---+-+-+---+--+",
           "++-+++-+-+++--++--+-+---+-+--+--++--",
           "+-++------++---++--++++--++---+-++++",
           "+-++++++----++----++----++-----+++++",
           "+++---++-++--+-+---+---+-++-+++++---",
           "+++++---+-+-+++--+--++---+---+++-+--",
           "+--++--+-+----+++++++--+-+-+--++--+-",
           "+---++-++-++-+-+----+-+-++-++-++---+",
       }},
  };
}

// Lookup key: lower case, unicode prime mapped to ', "-switched" folded into
// a prime, and the prime reduced to a flag so "H'36" and "H36'" collide.
std::string lookup_key(std::string_view name) {
  std::string s;
  s.reserve(name.size());
  for (std::size_t i = 0; i < name.size(); ++i) {
    // UTF-8 prime sign U+2032 is e2 80 b2.
    if (i + 2 < name.size() && static_cast<unsigned char>(name[i]) == 0xe2 &&
        static_cast<unsigned char>(name[i + 1]) == 0x80 &&
        static_cast<unsigned char>(name[i + 2]) == 0xb2) {
      s.push_back('\'');
      i += 2;
      continue;
    }
    s.push_back(static_cast<char>(
        std::tolower(static_cast<unsigned char>(name[i]))));
  }
  bool primed = false;
  const std::string kSwitched = "-switched";
  if (s.size() > kSwitched.size() &&
      s.compare(s.size() - kSwitched.size(), kSwitched.size(), kSwitched) ==
          0) {
    s.erase(s.size() - kSwitched.size());
    primed = true;
  }
  std::string base;
  for (char ch : s) {
    if (ch == '\'') {
      primed = true;
    } else {
      base.push_back(ch);
    }
  }
  return primed ? base + "'" : base;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry>* entries = [] {
    auto* v = new std::vector<CorpusEntry>;
    for (const RawEntry& raw : raw_entries()) {
      v->push_back({raw.name, SignMatrix::FromStrings(raw.rows)});
      if (!is_hadamard(v->back().matrix)) {
        throw std::logic_error("corpus: fixture " + v->back().name +
                               " failed the Hadamard self-test");
      }
    }
    return v;
  }();
  return *entries;
}

const SignMatrix& corpus_matrix(std::string_view name) {
  const std::string key = lookup_key(name);
  for (const CorpusEntry& e : corpus()) {
    if (lookup_key(e.name) == key) return e.matrix;
  }
  throw std::invalid_argument("corpus_matrix: unknown matrix name \"" +
                              std::string(name) + "\"");
}

bool corpus_has(std::string_view name) {
  const std::string key = lookup_key(name);
  for (const CorpusEntry& e : corpus()) {
    if (lookup_key(e.name) == key) return true;
  }
  return false;
}

std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const CorpusEntry& e : corpus()) names.push_back(e.name);
  return names;
}

}  // namespace hadsw
