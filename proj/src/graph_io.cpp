#include "dpc/graph_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <istream>
#include <sstream>

namespace dpc {

namespace {

constexpr int kBias = 63;

int size_bytes(int n) { return n <= 62 ? 1 : 4; }

void append_size(std::string& s, int n) {
  if (n <= 62) {
    s.push_back(static_cast<char>(n + kBias));
  } else {
    s.push_back(static_cast<char>(126));
    s.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    s.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    s.push_back(static_cast<char>((n & 63) + kBias));
  }
}

int read_size(const std::string& s, size_t& pos) {
  if (pos >= s.size()) throw GraphParseError("truncated size field");
  int c = s[pos++] - kBias;
  if (c < 0 || c > 63) throw GraphParseError("malformed size byte");
  if (c < 63) return c;
  if (pos + 3 > s.size()) throw GraphParseError("truncated size field");
  int n = 0;
  for (int k = 0; k < 3; k++) {
    int d = s[pos++] - kBias;
    if (d < 0 || d > 63) throw GraphParseError("malformed size byte");
    n = (n << 6) | d;
  }
  if ((pos < s.size()) && n == 63 * 4096 + 63 * 64 + 63)
    throw GraphParseError("graphs beyond 258047 vertices not supported");
  return n;
}

class BitWriter {
 public:
  void put(int bit) {
    cur_ = (cur_ << 1) | (bit & 1);
    if (++fill_ == 6) flush_group();
  }
  void put_bits(int value, int width) {
    for (int k = width - 1; k >= 0; k--) put((value >> k) & 1);
  }
  int pending() const { return fill_; }
  void pad(int bit) {
    while (fill_ != 0) put(bit);
  }
  const std::string& str() const { return out_; }

 private:
  void flush_group() {
    out_.push_back(static_cast<char>(cur_ + kBias));
    cur_ = 0;
    fill_ = 0;
  }
  std::string out_;
  int cur_ = 0;
  int fill_ = 0;
};

class BitReader {
 public:
  BitReader(const std::string& s, size_t pos) : s_(s), pos_(pos) {}
  // Returns -1 when the stream is exhausted.
  int get() {
    if (fill_ == 0) {
      if (pos_ >= s_.size()) return -1;
      int c = s_[pos_++] - kBias;
      if (c < 0 || c > 63) throw GraphParseError("malformed body byte");
      cur_ = c;
      fill_ = 6;
    }
    fill_--;
    return (cur_ >> fill_) & 1;
  }
  // Reads `width` bits; returns -1 if the stream ends first.
  long get_bits(int width) {
    long v = 0;
    for (int k = 0; k < width; k++) {
      int b = get();
      if (b < 0) return -1;
      v = (v << 1) | b;
    }
    return v;
  }

 private:
  const std::string& s_;
  size_t pos_;
  int cur_ = 0;
  int fill_ = 0;
};

int bits_for(int n) {
  int nb = 0;
  for (int i = n - 1; i != 0; i >>= 1) nb++;
  return nb;
}

}  // namespace

std::string emit_graph6(const MultiGraph& g) {
  if (!g.is_simple()) throw GraphParseError("graph6 cannot encode multiplicities");
  int n = g.order();
  std::string out;
  append_size(out, n);
  BitWriter bw;
  for (int j = 1; j < n; j++)
    for (int i = 0; i < j; i++) bw.put(g.mult(i, j) > 0 ? 1 : 0);
  bw.pad(0);
  out += bw.str();
  return out;
}

MultiGraph parse_graph6(const std::string& s) {
  size_t pos = 0;
  int n = read_size(s, pos);
  if (n > kMaxVertices) throw GraphParseError("graph too large for this tool");
  MultiGraph g(n);
  BitReader br(s, pos);
  for (int j = 1; j < n; j++)
    for (int i = 0; i < j; i++) {
      int b = br.get();
      if (b < 0) throw GraphParseError("truncated graph6 body");
      if (b) g.add_edge(i, j);
    }
  return g;
}

std::string emit_sparse6(const MultiGraph& g) {
  int n = g.order();
  std::string out = ":";
  append_size(out, n);
  int nb = bits_for(n);
  BitWriter bw;
  // Edge items sorted by larger endpoint, then smaller; copies consecutive.
  int v = 0;
  for (int y = 0; y < n; y++) {
    for (int x = 0; x <= y; x++) {
      for (int c = 0; c < g.mult(x, y); c++) {
        if (y == v) {
          bw.put(0);
          bw.put_bits(x, nb);
        } else if (y == v + 1) {
          v++;
          bw.put(1);
          bw.put_bits(x, nb);
        } else {
          v = y;
          bw.put(1);
          bw.put_bits(y, nb);
          bw.put(0);
          bw.put_bits(x, nb);
        }
      }
    }
  }
  // Padding: 1-bits, except that when n is a power of two and a full spare
  // item of 1s would decode as a loop at n-1 (current vertex n-2), the first
  // pad bit is 0.
  if (bw.pending() != 0) {
    int spare = 6 - bw.pending();
    bool power2 = n >= 2 && (n & (n - 1)) == 0;
    if (power2 && spare > nb && v == n - 2) bw.put(0);
    bw.pad(1);
  }
  out += bw.str();
  return out;
}

MultiGraph parse_sparse6(const std::string& s) {
  if (s.empty() || s[0] != ':') throw GraphParseError("sparse6 must start with ':'");
  size_t pos = 1;
  int n = read_size(s, pos);
  if (n > kMaxVertices) throw GraphParseError("graph too large for this tool");
  MultiGraph g(n);
  if (n == 0) return g;
  int nb = bits_for(n);
  BitReader br(s, pos);
  int v = 0;
  while (true) {
    int b = br.get();
    if (b < 0) break;
    if (b) v++;
    long x = br.get_bits(nb);
    if (x < 0) break;
    if (x > v) {
      v = static_cast<int>(x);
    } else if (v < n) {
      if (x == v) throw GraphParseError("loops are not allowed");
      if (g.mult(static_cast<int>(x), v) >= kMaxMultiplicity)
        throw GraphParseError("edge multiplicity above 3 is not supported");
      g.add_edge(static_cast<int>(x), v);
    }
  }
  return g;
}

MultiGraph parse_graph_line(const std::string& raw) {
  std::string line = raw;
  // Strip optional format headers.
  for (const char* hdr : {">>graph6<<", ">>sparse6<<"}) {
    size_t len = std::strlen(hdr);
    if (line.rfind(hdr, 0) == 0) line = line.substr(len);
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  if (line.empty()) throw GraphParseError("empty graph line");
  if (line[0] == ':') return parse_sparse6(line);
  return parse_graph6(line);
}

std::vector<MultiGraph> read_graph_stream(std::istream& in) {
  std::vector<MultiGraph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '>' && line.rfind(">>", 0) == 0) {
      // Header line; it may be glued to the first graph.
      std::string rest = line;
      for (const char* hdr : {">>graph6<<", ">>sparse6<<"}) {
        size_t len = std::strlen(hdr);
        if (rest.rfind(hdr, 0) == 0) rest = rest.substr(len);
      }
      if (rest.empty()) continue;
      out.push_back(parse_graph_line(rest));
      continue;
    }
    if (line[0] == '>') continue;  // comment
    out.push_back(parse_graph_line(line));
  }
  return out;
}

namespace {

bool is_gzip(const std::string& data) {
  return data.size() >= 2 && static_cast<unsigned char>(data[0]) == 0x1f &&
         static_cast<unsigned char>(data[1]) == 0x8b;
}

std::string gunzip(const std::string& data) {
  z_stream zs{};
  if (inflateInit2(&zs, 16 + MAX_WBITS) != Z_OK) throw GraphParseError("gzip init failed");
  std::string out;
  char buf[1 << 15];
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  zs.avail_in = static_cast<uInt>(data.size());
  int ret;
  do {
    zs.next_out = reinterpret_cast<Bytef*>(buf);
    zs.avail_out = sizeof(buf);
    ret = inflate(&zs, Z_NO_FLUSH);
    if (ret != Z_OK && ret != Z_STREAM_END) {
      inflateEnd(&zs);
      throw GraphParseError("gzip inflate failed");
    }
    out.append(buf, sizeof(buf) - zs.avail_out);
  } while (ret != Z_STREAM_END && zs.avail_in > 0);
  inflateEnd(&zs);
  return out;
}

}  // namespace

std::vector<MultiGraph> read_graph_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw GraphParseError("cannot open " + path);
  std::string data((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  if (is_gzip(data)) data = gunzip(data);
  std::istringstream ss(data);
  return read_graph_stream(ss);
}

}  // namespace dpc
