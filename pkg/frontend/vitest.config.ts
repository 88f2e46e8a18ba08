import { defineConfig } from 'vitest/config';
import { BASE } from './test/global-setup.ts';

export default defineConfig({
  test: {
    environment: 'happy-dom',
    // the real page is served by the API process itself, so the test
    // window lives at the same origin as the service
    environmentOptions: {
      happyDOM: { url: BASE },
    },
    globalSetup: './test/global-setup.ts',
    fileParallelism: false,
    testTimeout: 120000,
    hookTimeout: 120000,
  },
});
