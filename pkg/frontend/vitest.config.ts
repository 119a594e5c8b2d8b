import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["tests/**/*.test.ts"],
    // each parity case shells out to the compute CLI, which takes a second or two
    testTimeout: 180_000,
    hookTimeout: 60_000,
  },
});
