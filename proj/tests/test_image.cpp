// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include "autobench/errors.hpp"
#include "autobench/image.hpp"
#include "autobench/mock_generator.hpp"
#include "autobench/rng.hpp"
#include "autobench/toolbox.hpp"
#include "support.hpp"

using namespace autobench;

TEST_CASE("PNG round trip is lossless") {
  const ImageBuffer img = testing::TexturedImage(3, 97);
  CHECK(DecodeImage(EncodePng(img)) == img);
}

TEST_CASE("PNG encoding is deterministic") {
  const ImageBuffer img = testing::TexturedImage(4, 64);
  CHECK(EncodePng(img) == EncodePng(img));
}

TEST_CASE("decoding garbage fails") {
  const std::vector<std::uint8_t> junk{1, 2, 3, 4, 5};
  CHECK_THROWS_AS(DecodeImage(junk), Error);
}

TEST_CASE("Standardize center-crops to a 512 square") {
  ImageBuffer wide(800, 400);
  for (int y = 0; y < 400; ++y) {
    for (int x = 0; x < 800; ++x) {
      const std::uint8_t v = (x >= 200 && x < 600) ? 200 : 10;
      for (int c = 0; c < 3; ++c) wide.at(x, y, c) = v;
    }
  }
  const ImageBuffer out = Standardize(wide);
  REQUIRE(out.width() == kCanvasSize);
  REQUIRE(out.height() == kCanvasSize);
  // The crop keeps only the bright middle band.
  CHECK(out.at(0, 256, 0) == 200);
  CHECK(out.at(511, 256, 0) == 200);
}

TEST_CASE("Standardize is the identity on a 512 square") {
  const ImageBuffer img = testing::TexturedImage(5);
  CHECK(Standardize(img) == img);
}

TEST_CASE("PixelDigest distinguishes images and ignores encoding") {
  const ImageBuffer a = testing::TexturedImage(6, 32);
  ImageBuffer b = a;
  b.at(0, 0, 0) ^= 1;
  CHECK(PixelDigest(a) != PixelDigest(b));
  CHECK(PixelDigest(a) == PixelDigest(DecodeImage(EncodePng(a))));
}

TEST_CASE("barcode patterns are unique and carry fixed cells") {
  std::set<std::array<bool, 16>> seen;
  for (int i = 0; i < 256; ++i) {
    const auto p = BarcodePattern(i);
    CHECK(p[0]);
    CHECK(p[1]);
    CHECK_FALSE(p[4]);
    CHECK_FALSE(p[3]);
    CHECK_FALSE(p[12]);
    CHECK_FALSE(p[15]);
    seen.insert(p);
  }
  CHECK(seen.size() == 256);
}

TEST_CASE("barcode decodes every index on a busy background") {
  for (int i : {0, 1, 7, 42, 128, 254, 255}) {
    ImageBuffer img = testing::TexturedImage(static_cast<std::uint32_t>(i));
    StampBarcode(img, i);
    const auto got = DecodeBarcode(img);
    REQUIRE(got.has_value());
    CHECK(*got == i);
  }
}

TEST_CASE("barcode survives flips and right-angle rotations") {
  ImageBuffer img = testing::TexturedImage(9);
  StampBarcode(img, 77);
  for (bool h : {true, false}) CHECK(DecodeBarcode(transforms::Flip(img, h)) == 77);
  for (double a : {90.0, 180.0, 270.0}) CHECK(DecodeBarcode(transforms::Rotate(img, a)) == 77);
}

TEST_CASE("barcode survives losing three corners") {
  ImageBuffer img = testing::TexturedImage(10);
  StampBarcode(img, 99);
  for (int y = 0; y < kCanvasSize; ++y) {
    for (int x = 0; x < kCanvasSize; ++x) {
      const bool bottom_right = x >= kCanvasSize - kBarcodeSize && y >= kCanvasSize - kBarcodeSize;
      if (bottom_right) continue;
      if (x < kBarcodeSize || y < kBarcodeSize || x >= kCanvasSize - kBarcodeSize ||
          y >= kCanvasSize - kBarcodeSize) {
        for (int c = 0; c < 3; ++c) img.at(x, y, c) = 128;
      }
    }
  }
  CHECK(DecodeBarcode(img) == 99);
}

TEST_CASE("images without a barcode decode to nothing") {
  CHECK_FALSE(DecodeBarcode(ImageBuffer::Filled(512, 512, 255, 255, 255)).has_value());
  CHECK_FALSE(DecodeBarcode(ImageBuffer::Filled(512, 512, 0, 0, 0)).has_value());
}

TEST_CASE("mock generation is seeded and labelled") {
  const Codebook book({"car", "truck"});
  const ImageBuffer a = MockGenerate(book, "car", "photo", 1);
  CHECK(a == MockGenerate(book, "car", "photo", 1));
  CHECK_FALSE(a == MockGenerate(book, "car", "photo", 2));
  CHECK(DecodeBarcode(a) == 0);
  CHECK(DecodeBarcode(MockGenerate(book, "truck", "sketch", 5)) == 1);
  CHECK(DecodeBarcode(MockGenerate(book, "zebra", "photo", 5)) == Codebook::kUnknownIndex);
}

TEST_CASE("MockGenerator reads the class and size from the request") {
  MockGenerator gen(Codebook({"car", "fire truck", "truck"}));
  const ImageBuffer img = gen.Generate({"a sketch of a fire truck", 3, 512, 512});
  CHECK(DecodeBarcode(img) == 1);
  const ImageBuffer small = gen.Generate({"a photo of a car", 3, 128, 96});
  CHECK(small.width() == 128);
  CHECK(small.height() == 96);
  CHECK_THROWS_AS(gen.Generate({"a photo of a car", 3, 0, 96}), ValidationError);
}

TEST_CASE("corpus images keep their barcode after standardization") {
  const auto manifest = testing::CorpusManifest();
  const Codebook book(manifest->ClassNames());
  for (const auto& cls : manifest->classes()) {
    for (const auto& rec : cls.images) {
      CHECK(DecodeBarcode(Standardize(ReadImageFile(rec.path))) == book.IndexOf(cls.name));
    }
  }
}

TEST_CASE("DeriveStream separates coordinates") {
  CHECK(DeriveStream(1, {0}) != DeriveStream(1, {1}));
  CHECK(DeriveStream(1, {0, 1}) != DeriveStream(1, {1, 0}));
  CHECK(DeriveStream(1, {2}) == DeriveStream(1, {2}));
  CHECK(HashString("a") != HashString("b"));
}
