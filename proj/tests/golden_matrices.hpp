#pragma once

// Hand-transcribed members A_1 ... A_6 of the matrix family, written as
// canonical polynomial strings. Transcribed once and kept frozen; the
// test suite cross-validates every matrix against the independent
// invariance-expansion builder, so a transcription slip cannot hide.

#include <string>
#include <vector>

namespace golden {

using Rows = std::vector<std::vector<std::string>>;

inline const Rows kA1 = {
    {"a - 1", "b"},
    {"b", "a - 1"},
};

inline const Rows kA2 = {
    {"a^2 - 1", "ab", "b^2"},
    {"2ab", "a^2 + b^2 - 1", "2ab"},
    {"b^2", "ab", "a^2 - 1"},
};

inline const Rows kA3 = {
    {"a^3 - 1", "a^2b", "ab^2", "b^3"},
    {"3a^2b", "a^3 + 2ab^2 - 1", "2a^2b + b^3", "3ab^2"},
    {"3ab^2", "2a^2b + b^3", "a^3 + 2ab^2 - 1", "3a^2b"},
    {"b^3", "ab^2", "a^2b", "a^3 - 1"},
};

inline const Rows kA4 = {
    {"a^4 - 1", "a^3b", "a^2b^2", "ab^3", "b^4"},
    {"4a^3b", "a^4 + 3a^2b^2 - 1", "2a^3b + 2ab^3", "3a^2b^2 + b^4", "4ab^3"},
    {"6a^2b^2", "3a^3b + 3ab^3", "a^4 + 4a^2b^2 + b^4 - 1", "3a^3b + 3ab^3", "6a^2b^2"},
    {"4ab^3", "3a^2b^2 + b^4", "2a^3b + 2ab^3", "a^4 + 3a^2b^2 - 1", "4a^3b"},
    {"b^4", "ab^3", "a^2b^2", "a^3b", "a^4 - 1"},
};

inline const Rows kA5 = {
    {"a^5 - 1", "a^4b", "a^3b^2", "a^2b^3", "ab^4", "b^5"},
    {"5a^4b", "a^5 + 4a^3b^2 - 1", "2a^4b + 3a^2b^3", "3a^3b^2 + 2ab^4",
     "4a^2b^3 + b^5", "5ab^4"},
    {"10a^3b^2", "4a^4b + 6a^2b^3", "a^5 + 6a^3b^2 + 3ab^4 - 1",
     "3a^4b + 6a^2b^3 + b^5", "6a^3b^2 + 4ab^4", "10a^2b^3"},
    {"10a^2b^3", "6a^3b^2 + 4ab^4", "3a^4b + 6a^2b^3 + b^5",
     "a^5 + 6a^3b^2 + 3ab^4 - 1", "4a^4b + 6a^2b^3", "10a^3b^2"},
    {"5ab^4", "4a^2b^3 + b^5", "3a^3b^2 + 2ab^4", "2a^4b + 3a^2b^3",
     "a^5 + 4a^3b^2 - 1", "5a^4b"},
    {"b^5", "ab^4", "a^2b^3", "a^3b^2", "a^4b", "a^5 - 1"},
};

inline const Rows kA6 = {
    {"a^6 - 1", "a^5b", "a^4b^2", "a^3b^3", "a^2b^4", "ab^5", "b^6"},
    {"6a^5b", "a^6 + 5a^4b^2 - 1", "2a^5b + 4a^3b^3", "3a^4b^2 + 3a^2b^4",
     "4a^3b^3 + 2ab^5", "5a^2b^4 + b^6", "6ab^5"},
    {"15a^4b^2", "5a^5b + 10a^3b^3", "a^6 + 8a^4b^2 + 6a^2b^4 - 1",
     "3a^5b + 9a^3b^3 + 3ab^5", "6a^4b^2 + 8a^2b^4 + b^6", "10a^3b^3 + 5ab^5",
     "15a^2b^4"},
    {"20a^3b^3", "10a^4b^2 + 10a^2b^4", "4a^5b + 12a^3b^3 + 4ab^5",
     "a^6 + 9a^4b^2 + 9a^2b^4 + b^6 - 1", "4a^5b + 12a^3b^3 + 4ab^5",
     "10a^4b^2 + 10a^2b^4", "20a^3b^3"},
    {"15a^2b^4", "10a^3b^3 + 5ab^5", "6a^4b^2 + 8a^2b^4 + b^6",
     "3a^5b + 9a^3b^3 + 3ab^5", "a^6 + 8a^4b^2 + 6a^2b^4 - 1",
     "5a^5b + 10a^3b^3", "15a^4b^2"},
    {"6ab^5", "5a^2b^4 + b^6", "4a^3b^3 + 2ab^5", "3a^4b^2 + 3a^2b^4",
     "2a^5b + 4a^3b^3", "a^6 + 5a^4b^2 - 1", "6a^5b"},
    {"b^6", "ab^5", "a^2b^4", "a^3b^3", "a^4b^2", "a^5b", "a^6 - 1"},
};

inline const std::vector<const Rows*> kFamily = {&kA1, &kA2, &kA3, &kA4, &kA5, &kA6};

}  // namespace golden
