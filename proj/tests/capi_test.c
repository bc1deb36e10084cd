// Copyright 2026 The chm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* Compiled as C to check that the header is valid C. */
#include <string.h>

#include "chm/chm.h"

int chm_c_smoke(void) {
  chm_matrix* m = NULL;
  int real_count = -1;
  int ok = 0;
  if (chm_construct(6, 24, &m) != CHM_OK) return 1;
  if (chm_census(m, &real_count, NULL, NULL, NULL, NULL) != CHM_OK) ok = 2;
  if (ok == 0 && real_count != 24) ok = 3;
  chm_matrix_free(m);
  if (ok == 0 && chm_construct(6, 23, &m) != CHM_ERR_NOT_ACHIEVABLE) ok = 4;
  if (ok == 0 && strcmp(chm_status_name(CHM_ERR_NOT_ACHIEVABLE), "NotAchievable") != 0) ok = 5;
  return ok;
}
