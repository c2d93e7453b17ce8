#include "tabgen/tokenizer.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "tabgen/errors.hpp"
#include "tabgen/jsonl.hpp"

namespace tabgen {

namespace {

const std::string kBoundary = "\xe2\x96\x81";  // ▁, stands for a space

bool is_ws_char(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_digit_piece(const std::string& s) {
  return s.size() == 1 && std::isdigit(static_cast<unsigned char>(s[0]));
}

std::vector<std::string> reserved_pieces() {
  std::vector<std::string> r = {"<pad>", "</s>", "<unk>"};
  for (int k = 0; k < Vocab::kNumSentinels; ++k) {
    r.push_back("<extra_id_" + std::to_string(k) + ">");
  }
  return r;
}

std::string escape_piece(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string unescape_piece(const std::string& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out.push_back(s[i]);
      continue;
    }
    if (i + 1 >= s.size()) throw ParseError("dangling escape in vocab file");
    switch (s[++i]) {
      case '\\': out.push_back('\\'); break;
      case 'n': out.push_back('\n'); break;
      case 't': out.push_back('\t'); break;
      case 'r': out.push_back('\r'); break;
      default: throw ParseError("bad escape in vocab file");
    }
  }
  return out;
}

}  // namespace

int Vocab::piece_id(const std::string& piece) const {
  auto it = piece_to_id_.find(piece);
  return it == piece_to_id_.end() ? -1 : it->second;
}

int Vocab::merge_rank(const std::string& left, const std::string& right) const {
  auto it = merge_rank_.find({left, right});
  return it == merge_rank_.end() ? -1 : it->second;
}

void Vocab::rebuild_index() {
  piece_to_id_.clear();
  for (int i = 0; i < size(); ++i) piece_to_id_.emplace(pieces[i], i);
  merge_rank_.clear();
  for (size_t i = 0; i < merges.size(); ++i) merge_rank_.emplace(merges[i], static_cast<int>(i));
}

Vocab train_vocab(const std::vector<std::string>& corpus, int target_size) {
  // Alphabet: every distinct byte of the corpus, spaces rendered as the
  // boundary piece.
  std::set<std::string> alphabet;
  std::map<std::string, long long> word_freq;
  for (const std::string& text : corpus) {
    std::string word;
    for (char c : text) {
      if (is_ws_char(c)) {
        alphabet.insert(c == ' ' ? kBoundary : std::string(1, c));
        if (!word.empty()) {
          ++word_freq[word];
          word.clear();
        }
      } else {
        alphabet.insert(std::string(1, c));
        word.push_back(c);
      }
    }
    if (!word.empty()) ++word_freq[word];
  }

  const std::vector<std::string> reserved = reserved_pieces();
  const int reserved_count = static_cast<int>(reserved.size());
  if (reserved_count + static_cast<int>(alphabet.size()) > target_size) {
    throw CorpusTooSmall("target_size " + std::to_string(target_size) + " cannot hold " +
                         std::to_string(reserved_count) + " reserved pieces plus " +
                         std::to_string(alphabet.size()) + " alphabet pieces");
  }

  Vocab vocab;
  vocab.pieces = reserved;
  // Symbol table: local ids over piece strings, words as id sequences.
  std::vector<std::string> symbols;
  std::map<std::string, int> symbol_id;
  auto intern = [&](const std::string& s) {
    auto [it, inserted] = symbol_id.emplace(s, static_cast<int>(symbols.size()));
    if (inserted) symbols.push_back(s);
    return it->second;
  };
  for (const std::string& a : alphabet) {
    vocab.pieces.push_back(a);
    intern(a);
  }

  struct Word {
    std::vector<int> syms;
    long long freq;
  };
  std::vector<Word> words;
  words.reserve(word_freq.size());
  for (const auto& [w, freq] : word_freq) {
    Word word;
    word.freq = freq;
    for (char c : w) word.syms.push_back(intern(std::string(1, c)));
    words.push_back(std::move(word));
  }

  const std::set<std::string> reserved_set(reserved.begin(), reserved.end());
  std::set<std::pair<int, int>> banned;  // pairs whose merged string is taken

  while (vocab.size() < target_size) {
    std::unordered_map<uint64_t, long long> counts;
    for (const Word& w : words) {
      for (size_t i = 0; i + 1 < w.syms.size(); ++i) {
        uint64_t key = (static_cast<uint64_t>(w.syms[i]) << 32) |
                       static_cast<uint32_t>(w.syms[i + 1]);
        counts[key] += w.freq;
      }
    }
    long long best_count = 0;
    std::pair<int, int> best{-1, -1};
    for (const auto& [key, count] : counts) {
      std::pair<int, int> p{static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffff)};
      if (banned.count(p)) continue;
      if (count > best_count) {
        best_count = count;
        best = p;
      } else if (count == best_count && count > 0) {
        // lexicographically smaller (left, right) wins ties
        const auto& [bl, br] = best;
        if (symbols[p.first] < symbols[bl] ||
            (symbols[p.first] == symbols[bl] && symbols[p.second] < symbols[br])) {
          best = p;
        }
      }
    }
    if (best_count == 0) {
      throw CorpusTooSmall("corpus exhausted after " + std::to_string(vocab.merges.size()) +
                           " merges; cannot reach target_size " + std::to_string(target_size));
    }
    const std::string merged = symbols[best.first] + symbols[best.second];
    if (reserved_set.count(merged) || symbol_id.count(merged)) {
      banned.insert(best);
      continue;
    }
    const int merged_sym = intern(merged);
    vocab.merges.emplace_back(symbols[best.first], symbols[best.second]);
    vocab.pieces.push_back(merged);
    for (Word& w : words) {
      std::vector<int>& s = w.syms;
      size_t out = 0;
      for (size_t i = 0; i < s.size(); ++i) {
        if (i + 1 < s.size() && s[i] == best.first && s[i + 1] == best.second) {
          s[out++] = merged_sym;
          ++i;
        } else {
          s[out++] = s[i];
        }
      }
      s.resize(out);
    }
  }

  vocab.rebuild_index();
  return vocab;
}

namespace {

// Applies merges to one word's symbol strings, lowest-rank pair first,
// all occurrences left to right. Digit symbols never merge when
// number_split is set.
void apply_merges(const Vocab& vocab, std::vector<std::string>& syms, bool number_split) {
  auto mergeable = [&](const std::string& s) { return !number_split || !is_digit_piece(s); };
  while (syms.size() > 1) {
    int best_rank = -1;
    for (size_t i = 0; i + 1 < syms.size(); ++i) {
      if (!mergeable(syms[i]) || !mergeable(syms[i + 1])) continue;
      const int r = vocab.merge_rank(syms[i], syms[i + 1]);
      if (r >= 0 && (best_rank < 0 || r < best_rank)) best_rank = r;
    }
    if (best_rank < 0) break;
    const auto& [left, right] = vocab.merges[best_rank];
    std::vector<std::string> out;
    out.reserve(syms.size());
    for (size_t i = 0; i < syms.size(); ++i) {
      if (i + 1 < syms.size() && syms[i] == left && syms[i + 1] == right && mergeable(syms[i]) &&
          mergeable(syms[i + 1])) {
        out.push_back(left + right);
        ++i;
      } else {
        out.push_back(syms[i]);
      }
    }
    syms = std::move(out);
  }
}

}  // namespace

std::vector<int> encode_text(const Vocab& vocab, const std::string& text, bool number_split) {
  std::map<std::pair<std::string, std::string>, int> rank;
  for (size_t i = 0; i < vocab.merges.size(); ++i) rank.emplace(vocab.merges[i], i);

  std::vector<int> ids;
  std::vector<std::string> word;
  auto flush_word = [&] {
    if (word.empty()) return;
    apply_merges(vocab, rank, word, number_split);
    for (const std::string& s : word) {
      const int id = vocab.piece_id(s);
      ids.push_back(id < 0 ? Vocab::kUnk : id);
    }
    word.clear();
  };
  for (char c : text) {
    if (is_ws_char(c)) {
      flush_word();
      const std::string piece = (c == ' ') ? kBoundary : std::string(1, c);
      const int id = vocab.piece_id(piece);
      ids.push_back(id < 0 ? Vocab::kUnk : id);
    } else {
      word.push_back(std::string(1, c));
    }
  }
  flush_word();
  return ids;
}

std::string decode_ids(const Vocab& vocab, const std::vector<int>& ids) {
  std::string joined;
  for (int id : ids) {
    if (id < 0 || id >= vocab.size()) {
      throw UnknownId("token id " + std::to_string(id) + " outside vocab of size " +
                      std::to_string(vocab.size()));
    }
    if (Vocab::is_reserved(id)) continue;
    joined += vocab.pieces[id];
  }
  std::string out;
  out.reserve(joined.size());
  for (size_t i = 0; i < joined.size();) {
    if (joined.compare(i, kBoundary.size(), kBoundary) == 0) {
      out.push_back(' ');
      i += kBoundary.size();
    } else {
      out.push_back(joined[i++]);
    }
  }
  return out;
}

StructuredTokenSequence encode_stream(const Vocab& vocab, const std::vector<Component>& components,
                                      int max_input_len, bool number_split) {
  StructuredTokenSequence seq;
  const int budget = max_input_len - 1;  // room for eos
  for (const Component& comp : components) {
    if (seq.length() >= budget) break;
    std::vector<int> ids = encode_text(vocab, comp.utterance, number_split);
    const int room = budget - seq.length();
    if (static_cast<int>(ids.size()) > room) ids.resize(room);
    for (int id : ids) {
      seq.push(id, static_cast<int>(comp.ctype), comp.row, comp.col);
    }
  }
  seq.push(Vocab::kEos, 0, 0, 0);
  return seq;
}

std::string serialize_vocab(const Vocab& vocab) {
  std::ostringstream out;
  out << "tabgen-vocab v1\n";
  out << "pieces " << vocab.size() << "\n";
  for (const std::string& p : vocab.pieces) out << escape_piece(p) << "\n";
  out << "merges " << vocab.merges.size() << "\n";
  for (const auto& [l, r] : vocab.merges) {
    out << escape_piece(l) << "\t" << escape_piece(r) << "\n";
  }
  return out.str();
}

Vocab parse_vocab(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "tabgen-vocab v1") {
    throw ParseError("bad vocab header");
  }
  auto read_count = [&](const std::string& tag) {
    if (!std::getline(in, line) || line.rfind(tag + " ", 0) != 0) {
      throw ParseError("expected '" + tag + " N' line in vocab file");
    }
    return std::stoul(line.substr(tag.size() + 1));
  };
  Vocab vocab;
  const size_t n_pieces = read_count("pieces");
  for (size_t i = 0; i < n_pieces; ++i) {
    if (!std::getline(in, line)) throw ParseError("vocab file truncated in pieces");
    vocab.pieces.push_back(unescape_piece(line));
  }
  const std::vector<std::string> reserved = reserved_pieces();
  if (vocab.size() < static_cast<int>(reserved.size()) ||
      !std::equal(reserved.begin(), reserved.end(), vocab.pieces.begin())) {
    throw ParseError("vocab file missing reserved pieces");
  }
  const size_t n_merges = read_count("merges");
  for (size_t i = 0; i < n_merges; ++i) {
    if (!std::getline(in, line)) throw ParseError("vocab file truncated in merges");
    const size_t tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError("merge line missing tab separator");
    vocab.merges.emplace_back(unescape_piece(line.substr(0, tab)),
                              unescape_piece(line.substr(tab + 1)));
  }
  vocab.rebuild_index();
  return vocab;
}

Vocab load_vocab(const std::string& path) { return parse_vocab(read_file(path)); }

void save_vocab(const std::string& path, const Vocab& vocab) {
  write_file(path, serialize_vocab(vocab));
}

}  // namespace tabgen
