/* Apache License, Version 2.0 */

#include <doctest.h>

#include <cstring>
#include <string>

#include "enriques/enriques_c.h"

TEST_CASE("version and status names")
{
  CHECK(std::string(es_version()) == "1.0.0");
  CHECK(std::string(es_status_name(ES_OK)) == "ok");
  CHECK(std::string(es_status_name(ES_PARSE_ERROR)) == "parse_error");
  CHECK(std::string(es_tsv_header()) == "# enriques-severi v1");
}

TEST_CASE("pair and canonical")
{
  int64_t v = 0;
  CHECK(es_pair("E", "E1", "E9.10", &v) == ES_OK);
  CHECK(v == 1);
  CHECK(es_pair("R4", "2s-f-e1-e2-e3-e4", "2s-f-e1-e2-e3-e4", &v) == ES_OK);
  CHECK(v == -4);
  CHECK(es_pair("R2", "s+q", "f", &v) == ES_PARSE_ERROR);
  CHECK(es_last_error_offset() == 2);
  CHECK(std::strlen(es_last_error()) > 0);
  CHECK(es_pair("Q1", "l", "l", &v) != ES_OK);
  CHECK(es_pair(nullptr, "l", "l", &v) == ES_INVALID_ARGUMENT);

  char *text = nullptr;
  REQUIRE(es_canonical("P3", "-3e3+6l-3e1 - 3 e2", &text) == ES_OK);
  CHECK(std::string(text) == "6l-3e1-3e2-3e3");
  es_string_free(text);
}

TEST_CASE("classify and plan")
{
  int64_t c[ES_NUM_COEFFICIENTS];
  REQUIRE(es_parse_coefficients("3,0,0,0,0,0,0,0,3,0,0", c) == ES_OK);
  es_record *r = nullptr;
  REQUIRE(es_plan(c, &r) == ES_OK);
  CHECK(es_record_verified(r) == 1);
  CHECK(es_record_genus(r) == 19);
  CHECK(std::string(es_record_json(r)).find("\"case_id\":\"S722\"") != std::string::npos);
  es_record_free(r);

  REQUIRE(es_classify(c, &r) == ES_OK);
  CHECK(es_record_verified(r) == -1);
  es_record_free(r);

  REQUIRE(es_parse_coefficients("2,0,0,0,0,0,0,0,2,0,0", c) == ES_OK);
  CHECK(es_plan(c, &r) == ES_OUT_OF_THEOREM);
  REQUIRE(es_parse_coefficients("0,1,2,0,0,0,0,0,0,0,0", c) == ES_OK);
  CHECK(es_plan(c, &r) == ES_INVALID_ARGUMENT);
  CHECK(es_parse_coefficients("1,2", c) == ES_PARSE_ERROR);
  CHECK(es_last_error_offset() >= 0);
}

TEST_CASE("enumerate and verify")
{
  es_record_list *list = nullptr;
  REQUIRE(es_enumerate(3, 3, ES_FILTER_ALL, 0, 2, &list) == ES_OK);
  CHECK(es_record_list_size(list) > 0);
  bool found = false;
  for (size_t i = 0; i < es_record_list_size(list); i++) {
    const std::string json = es_record_json(es_record_list_at(list, i));
    found = found || json.find("\"coefficients\":[1,0,0,0,0,0,0,0,1,0,0]") != std::string::npos;
  }
  CHECK(found);
  CHECK(es_record_list_at(list, es_record_list_size(list)) == nullptr);
  es_record_list_free(list);
  CHECK(es_enumerate(1, 3, ES_FILTER_ALL, 0, 1, &list) == ES_INVALID_ARGUMENT);

  es_report *rep = nullptr;
  REQUIRE(es_verify_range(2, 2, 1, &rep) == ES_OK);
  CHECK(es_report_total(rep) == 1);
  CHECK(es_report_failed(rep) == 0);
  es_report_free(rep);

  REQUIRE(es_selftest(&rep) == ES_OK);
  CHECK(es_report_failed(rep) == 0);
  CHECK(es_report_total(rep) == 13);
  es_report_free(rep);
}

TEST_CASE("null handles are tolerated by accessors")
{
  CHECK(std::string(es_record_json(nullptr)).empty());
  CHECK(es_record_verified(nullptr) == -1);
  CHECK(es_record_list_size(nullptr) == 0);
  CHECK(es_report_total(nullptr) == 0);
  es_record_free(nullptr);
  es_record_list_free(nullptr);
  es_report_free(nullptr);
}
