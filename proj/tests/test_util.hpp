#pragma once

#include <gtest/gtest.h>

#include "jinsig/error.hpp"

/// Expects `stmt` to throw jinsig::Error carrying `expected_code`.
#define EXPECT_ERROR_CODE(stmt, expected_code)                                          \
  do {                                                                                  \
    try {                                                                               \
      stmt;                                                                             \
      ADD_FAILURE() << "expected " << jinsig::to_string(expected_code) << " from " #stmt; \
    } catch (const jinsig::Error& e) {                                                  \
      EXPECT_EQ(e.code(), expected_code) << e.what();                                   \
    }                                                                                   \
  } while (0)
