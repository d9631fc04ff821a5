// Bootstrap: wire the API client, view-model, and renderer together.
// The API base URL comes from the ?api= query parameter when present.

import { ApiClient } from "./api.js";
import { SessionFlow } from "./flow.js";
import { render } from "./render.js";

const params = new URLSearchParams(window.location.search);
const baseUrl = params.get("api") ?? "http://127.0.0.1:8000";

const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app container");
}

const flow = new SessionFlow(new ApiClient(baseUrl));
flow.subscribe(() => render(root, flow));
render(root, flow);
void flow.start();
