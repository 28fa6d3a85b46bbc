#include <random>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "fuzzcrypt/detail/sha256.hpp"
#include "fuzzcrypt/detail/utf8.hpp"
#include "test_support.hpp"

using namespace fuzzcrypt;
using testsupport::HasCode;

// Published FIPS 180-4 vectors.
TEST_CASE("sha256 matches the standard test vectors") {
  CHECK(detail::sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(detail::sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(detail::sha256_hex(
            "abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
        "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST_CASE("sha256 streaming equals one-shot") {
  const std::string million(1000000, 'a');
  CHECK(detail::sha256_hex(million) ==
        "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");

  // Feed the same bytes in awkward chunk sizes.
  detail::Sha256 h;
  std::size_t off = 0;
  while (off < million.size()) {
    const std::size_t take = std::min<std::size_t>(997, million.size() - off);
    h.update(million.data() + off, take);
    off += take;
  }
  CHECK(detail::hex_encode(h.finish()) ==
        "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");
}

TEST_CASE("utf8 decode handles ascii and multibyte scalars") {
  const std::u32string decoded = detail::utf8_decode("h\xc3\xa9\xe2\x82\xac\xf0\x9d\x84\x9e");
  REQUIRE(decoded.size() == 4);
  CHECK(decoded[0] == U'h');
  CHECK(decoded[1] == char32_t{0xe9});
  CHECK(decoded[2] == char32_t{0x20ac});
  CHECK(decoded[3] == char32_t{0x1d11e});
  CHECK(detail::utf8_encode(decoded) ==
        "h\xc3\xa9\xe2\x82\xac\xf0\x9d\x84\x9e");
}

TEST_CASE("utf8 decode rejects malformed input") {
  const auto decode = [](std::string_view s) {
    return detail::utf8_decode(s);
  };
  CHECK_THROWS_MATCHES(decode("\xff"), Error, HasCode(ErrorCode::encoding));
  CHECK_THROWS_MATCHES(decode("\x80"), Error, HasCode(ErrorCode::encoding));
  CHECK_THROWS_MATCHES(decode("\xc0\x80"), Error,
                       HasCode(ErrorCode::encoding));  // overlong NUL
  CHECK_THROWS_MATCHES(decode("\xed\xa0\x80"), Error,
                       HasCode(ErrorCode::encoding));  // surrogate
  CHECK_THROWS_MATCHES(decode("\xe2\x82"), Error,
                       HasCode(ErrorCode::encoding));  // truncated
  CHECK_THROWS_MATCHES(decode("\xf4\x90\x80\x80"), Error,
                       HasCode(ErrorCode::encoding));  // past U+10FFFF
  CHECK_THROWS_MATCHES(decode("ok\xc2"), Error, HasCode(ErrorCode::encoding));
}

TEST_CASE("utf8 encode-decode round trip on random text") {
  std::mt19937_64 rng(20240601);
  for (int round = 0; round < 200; ++round) {
    const std::u32string text = testsupport::random_text(rng, 300);
    CHECK(detail::utf8_decode(detail::utf8_encode(text)) == text);
  }
}
