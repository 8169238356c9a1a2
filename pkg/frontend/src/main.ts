import { ApiClient } from './api.js';
import { App } from './app.js';
import type { CreateGameRequest } from './types.js';

interface Preset {
  label: string;
  request: CreateGameRequest;
}

const PRESETS: Preset[] = [
  {
    label: 'Four-bar endgame (you are Right)',
    request: {
      bars: '-(2,4) -(1,3) +(2,3) +(2,0)',
      human_side: 'R',
      first_mover: 'L',
    },
  },
  {
    label: 'Single (9,9) bar (you are Left)',
    request: { bars: '+(9,9)', human_side: 'L', first_mover: 'L' },
  },
  {
    label: 'Single (2,3) bar (you are Left)',
    request: { bars: '+(2,3)', human_side: 'L', first_mover: 'L' },
  },
];

function boot(): void {
  const app = new App(new ApiClient(''));

  const presetSelect = document.getElementById('preset') as HTMLSelectElement;
  PRESETS.forEach((preset, index) => {
    const option = document.createElement('option');
    option.value = String(index);
    option.textContent = preset.label;
    presetSelect.appendChild(option);
  });

  const customInput = document.getElementById('custom-bars') as HTMLInputElement;
  const customSide = document.getElementById('custom-side') as HTMLSelectElement;

  document.getElementById('new-game')!.addEventListener('click', () => {
    const custom = customInput.value.trim();
    if (custom) {
      const side = customSide.value === 'L' ? 'L' : 'R';
      void app.newGame({
        bars: custom,
        human_side: side,
        first_mover: side === 'L' ? 'R' : 'L',
      });
    } else {
      void app.newGame(PRESETS[Number(presetSelect.value)].request);
    }
  });

  const modeSelect = document.getElementById('mode') as HTMLSelectElement;
  modeSelect.addEventListener('change', () => {
    app.setMode(modeSelect.value === 'rooks' ? 'rooks' : 'chocolate');
  });

  app.render();
}

boot();
