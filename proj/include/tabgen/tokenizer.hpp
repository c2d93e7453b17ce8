#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tabgen/tabledoc.hpp"

namespace tabgen {

// Token stream where every token carries the type/row/col of the component
// it came from; control tokens carry (0,0,0).
struct StructuredTokenSequence {
  std::vector<int> token_ids;
  std::vector<int> type_ids;
  std::vector<int> row_ids;
  std::vector<int> col_ids;

  int length() const { return static_cast<int>(token_ids.size()); }
  void push(int token, int type, int row, int col) {
    token_ids.push_back(token);
    type_ids.push_back(type);
    row_ids.push_back(row);
    col_ids.push_back(col);
  }
  bool operator==(const StructuredTokenSequence&) const = default;
};

// Byte-pair vocabulary. Ids 0..102 are reserved (pad, eos, unk, 100
// sentinels) and never produced by training; the base alphabet follows in
// lexicographic order, then merged pieces in merge order. Spaces are
// represented by the word-boundary piece "▁"; merges are learned within
// whitespace-separated words and never cross it.
struct Vocab {
  static constexpr int kPad = 0;
  static constexpr int kEos = 1;
  static constexpr int kUnk = 2;
  static constexpr int kSentinelBase = 3;
  static constexpr int kNumSentinels = 100;
  static constexpr int kNumReserved = kSentinelBase + kNumSentinels;

  std::vector<std::string> pieces;
  std::vector<std::pair<std::string, std::string>> merges;

  int size() const { return static_cast<int>(pieces.size()); }
  static int sentinel_id(int k) { return kSentinelBase + k; }
  static bool is_sentinel(int id) { return id >= kSentinelBase && id < kNumReserved; }
  static bool is_reserved(int id) { return id >= 0 && id < kNumReserved; }

  int piece_id(const std::string& piece) const;  // -1 when absent
  int merge_rank(const std::string& left, const std::string& right) const;  // -1 when absent
  void rebuild_index();

 private:
  std::unordered_map<std::string, int> piece_to_id_;
  std::map<std::pair<std::string, std::string>, int> merge_rank_;
};

// Greedy pair-merge training. Deterministic: most frequent pair wins, ties
// broken by lexicographically smaller (left, right). Throws CorpusTooSmall
// when reserved + alphabet exceed target_size or the corpus runs out of
// merges before reaching it.
Vocab train_vocab(const std::vector<std::string>& corpus, int target_size);

// number_split makes every digit character its own token, exempt from
// merging. Unknown characters map to unk.
std::vector<int> encode_text(const Vocab& vocab, const std::string& text,
                             bool number_split = false);

// Inverse of encode_text for in-vocab text; reserved ids render empty.
// Throws UnknownId on out-of-range ids.
std::string decode_ids(const Vocab& vocab, const std::vector<int>& ids);

// Expands components into one structured sequence ending in eos. Truncation
// to max_input_len keeps leading components whole and clips the component
// at the boundary from its tail.
StructuredTokenSequence encode_stream(const Vocab& vocab, const std::vector<Component>& components,
                                      int max_input_len, bool number_split = false);

// Deterministic text format: version header, pieces in id order, merges in
// application order. \n, \t, \r and backslash are escaped.
std::string serialize_vocab(const Vocab& vocab);
Vocab parse_vocab(const std::string& text);

Vocab load_vocab(const std::string& path);
void save_vocab(const std::string& path, const Vocab& vocab);

}  // namespace tabgen
