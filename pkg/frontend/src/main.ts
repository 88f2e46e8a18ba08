import { GalleryView } from './gallery';
import { PlayView } from './play';

export function mountApp(root: HTMLElement): { play: PlayView; gallery: GalleryView } {
  const tabs = document.createElement('nav');
  tabs.className = 'tabs';
  const playTab = document.createElement('button');
  playTab.textContent = 'play';
  playTab.id = 'tab-play';
  playTab.className = 'tab active';
  const galleryTab = document.createElement('button');
  galleryTab.textContent = 'gallery';
  galleryTab.id = 'tab-gallery';
  galleryTab.className = 'tab';

  const playRoot = document.createElement('section');
  playRoot.id = 'view-play';
  const galleryRoot = document.createElement('section');
  galleryRoot.id = 'view-gallery';
  galleryRoot.hidden = true;

  playTab.addEventListener('click', () => {
    playRoot.hidden = false;
    galleryRoot.hidden = true;
    playTab.classList.add('active');
    galleryTab.classList.remove('active');
  });
  galleryTab.addEventListener('click', () => {
    playRoot.hidden = true;
    galleryRoot.hidden = false;
    galleryTab.classList.add('active');
    playTab.classList.remove('active');
  });

  tabs.append(playTab, galleryTab);
  root.replaceChildren(tabs, playRoot, galleryRoot);
  const play = new PlayView(playRoot);
  const gallery = new GalleryView(galleryRoot);
  return { play, gallery };
}

declare global {
  interface Window {
    gridlockApp?: ReturnType<typeof mountApp>;
  }
}

if (typeof document !== 'undefined' && document.getElementById('app')) {
  window.gridlockApp = mountApp(document.getElementById('app')!);
}
